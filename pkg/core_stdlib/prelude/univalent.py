"""
Univalent relations on the type formers: dependent products, dependent sums,
the identity type and lists, plus the identity relations on base types.
"""
from __future__ import annotations

from core_kernel.builder import app, arrow, arrows, c, lam, lams, pi, pis
from core_kernel.env import Declaration, Origin

from .common import Empty, T, eq, poly_define, poly_opaque, unit
from .logic import (
    adj_ty, coh_ty, e_fun, e_inv, equiv, mk_equiv, pair, proj1, proj2, retr_ty, sect_ty, sig,
    ur_equiv, ur_pack, ur_refl_rel, ur_rel, ur_retr_rel, urtype,
)

BASE_TYPES = ('nat', 'bool', 'N', 'positive', 'unit', 'Empty', 'int16')


def family_binders(i, j):
    """``A A' (AR : A ⋈ A') P Q (PQ : Π a a' r, P a ⋈ Q a')``."""
    return [
        ('A', T(i)),
        ('A_', lambda A: T(i)),
        ('AR', lambda A, A_: urtype(i, A, A_)),
        ('P', lambda A, A_, AR: arrow(A, T(j))),
        ('Q', lambda A, A_, AR, P: arrow(A_, T(j))),
        ('PQ', lambda A, A_, AR, P, Q: pis(
            [('a', A), ('a_', A_), ('r', lambda a, a_: app(ur_rel(i, A, A_, AR), a, a_))],
            lambda a, a_, r: urtype(j, app(P, a), app(Q, a_)))),
    ]


def _dep(A, P):
    return pi('a', A, lambda a: app(P, a))


# ---- dependent products -------------------------------------------------

def _Pi_rel(i, j):  # noqa: N802
    k = max(i, j)
    binders = family_binders(i, j)

    def type_(A, A_, AR, P, Q, PQ):
        return arrows(_dep(A, P), _dep(A_, Q), T(k))

    def body(A, A_, AR, P, Q, PQ):
        def rel(f, g):
            return pis(
                [('a', A), ('a_', A_), ('r', lambda a, a_: app(ur_rel(i, A, A_, AR), a, a_))],
                lambda a, a_, r: app(ur_rel(j, app(P, a), app(Q, a_), app(PQ, a, a_, r)),
                                     app(f, a), app(g, a_)))
        return lams([('f', _dep(A, P)), ('g', _dep(A_, Q))], rel)

    return pis(binders, type_), lams(binders, body)


def _Pi_fwd(i, j):  # noqa: N802
    binders = family_binders(i, j)

    def type_(A, A_, AR, P, Q, PQ):
        return arrow(_dep(A, P), _dep(A_, Q))

    def body(A, A_, AR, P, Q, PQ):
        def at(f, a_):
            x = app(e_inv(i, A, A_, ur_equiv(i, A, A_, AR)), a_)
            W = app(PQ, x, a_, ur_retr_rel(i, A, A_, AR, a_))
            return app(e_fun(j, app(P, x), app(Q, a_), ur_equiv(j, app(P, x), app(Q, a_), W)),
                       app(f, x))
        return lams([('f', _dep(A, P)), ('a_', A_)], at)

    return pis(binders, type_), lams(binders, body)


def _Pi_inv(i, j):  # noqa: N802
    binders = family_binders(i, j)

    def type_(A, A_, AR, P, Q, PQ):
        return arrow(_dep(A_, Q), _dep(A, P))

    def body(A, A_, AR, P, Q, PQ):
        def at(g, a):
            y = app(e_fun(i, A, A_, ur_equiv(i, A, A_, AR)), a)
            W = app(PQ, a, y, ur_refl_rel(i, A, A_, AR, a))
            return app(e_inv(j, app(P, a), app(Q, y), ur_equiv(j, app(P, a), app(Q, y), W)),
                       app(g, y))
        return lams([('g', _dep(A_, Q)), ('a', A)], at)

    return pis(binders, type_), lams(binders, body)


def _family_equiv_parts(prefix, i, j, params):
    """Forward map, inverse, section, retraction of the ``prefix`` family."""
    A, A_, AR, P, Q, PQ = params
    return tuple(app(c(f'{prefix}_{part}', i, j), A, A_, AR, P, Q, PQ)
                 for part in ('fwd', 'inv', 'sect', 'retr'))


def _opaque_law(prefix, law, carrier_left, carrier_right):
    """Trusted section/retraction/adjunction of a family equivalence."""
    def build(i, j):
        k = max(i, j)
        binders = family_binders(i, j)

        def type_(*params):
            L, R = carrier_left(i, j, *params), carrier_right(i, j, *params)
            fwd, inv, sect, retr = _family_equiv_parts(prefix, i, j, params)
            if law == 'sect':
                return sect_ty(k, L, fwd, inv)
            if law == 'retr':
                return retr_ty(k, R, fwd, inv)
            return adj_ty(k, L, R, fwd, inv, sect, retr)

        return pis(binders, type_)
    return build


def _pi_left(i, j, A, A_, AR, P, Q, PQ):
    return _dep(A, P)


def _pi_right(i, j, A, A_, AR, P, Q, PQ):
    return _dep(A_, Q)


def _family_equiv(prefix, carrier_left, carrier_right):
    def build(i, j):
        k = max(i, j)
        binders = family_binders(i, j)

        def type_(*params):
            return equiv(k, carrier_left(i, j, *params), carrier_right(i, j, *params))

        def body(*params):
            fwd, inv, sect, retr = _family_equiv_parts(prefix, i, j, params)
            adj = app(c(f'{prefix}_adj', i, j), *params)
            return mk_equiv(k, carrier_left(i, j, *params), carrier_right(i, j, *params),
                            fwd, inv, sect, retr, adj)

        return pis(binders, type_), lams(binders, body)
    return build


def _family_coh(rel_name, equiv_name, carrier_left, carrier_right):
    def build(i, j):
        k = max(i, j)
        binders = family_binders(i, j)

        def type_(*params):
            L, R = carrier_left(i, j, *params), carrier_right(i, j, *params)
            return coh_ty(k, L, R, app(c(rel_name, i, j), *params), app(c(equiv_name, i, j), *params))

        return pis(binders, type_)
    return build


def _family_pack(rel_name, equiv_name, coh_name, carrier_left, carrier_right):
    def build(i, j):
        k = max(i, j)
        binders = family_binders(i, j)

        def type_(*params):
            return urtype(k, carrier_left(i, j, *params), carrier_right(i, j, *params))

        def body(*params):
            return ur_pack(k, carrier_left(i, j, *params), carrier_right(i, j, *params),
                           app(c(rel_name, i, j), *params), app(c(equiv_name, i, j), *params),
                           app(c(coh_name, i, j), *params))

        return pis(binders, type_), lams(binders, body)
    return build


# ---- dependent sums -----------------------------------------------------

def _sigma_left(i, j, A, A_, AR, P, Q, PQ):
    return sig(i, j, A, P)


def _sigma_right(i, j, A, A_, AR, P, Q, PQ):
    return sig(i, j, A_, Q)


def _R_Sigma(i, j):  # noqa: N802
    k = max(i, j)
    binders = family_binders(i, j)

    def type_(A, A_, AR, P, Q, PQ):
        return arrows(sig(i, j, A, P), sig(i, j, A_, Q), T(k))

    def body(A, A_, AR, P, Q, PQ):
        def rel(s, s_):
            x, x_ = proj1(i, j, A, P, s), proj1(i, j, A_, Q, s_)
            head = app(ur_rel(i, A, A_, AR), x, x_)
            return sig(i, j, head, lam('r', head, lambda r: app(
                ur_rel(j, app(P, x), app(Q, x_), app(PQ, x, x_, r)),
                proj2(i, j, A, P, s), proj2(i, j, A_, Q, s_))))
        return lams([('s', sig(i, j, A, P)), ('s_', sig(i, j, A_, Q))], rel)

    return pis(binders, type_), lams(binders, body)


def _Sigma_fwd(i, j):  # noqa: N802
    binders = family_binders(i, j)

    def type_(A, A_, AR, P, Q, PQ):
        return arrow(sig(i, j, A, P), sig(i, j, A_, Q))

    def body(A, A_, AR, P, Q, PQ):
        def at(s):
            x = proj1(i, j, A, P, s)
            y = app(e_fun(i, A, A_, ur_equiv(i, A, A_, AR)), x)
            W = app(PQ, x, y, ur_refl_rel(i, A, A_, AR, x))
            moved = app(e_fun(j, app(P, x), app(Q, y), ur_equiv(j, app(P, x), app(Q, y), W)),
                        proj2(i, j, A, P, s))
            return pair(i, j, A_, Q, y, moved)
        return lam('s', sig(i, j, A, P), at)

    return pis(binders, type_), lams(binders, body)


def _Sigma_inv(i, j):  # noqa: N802
    binders = family_binders(i, j)

    def type_(A, A_, AR, P, Q, PQ):
        return arrow(sig(i, j, A_, Q), sig(i, j, A, P))

    def body(A, A_, AR, P, Q, PQ):
        def at(s_):
            y = proj1(i, j, A_, Q, s_)
            x = app(e_inv(i, A, A_, ur_equiv(i, A, A_, AR)), y)
            W = app(PQ, x, y, ur_retr_rel(i, A, A_, AR, y))
            moved = app(e_inv(j, app(P, x), app(Q, y), ur_equiv(j, app(P, x), app(Q, y), W)),
                        proj2(i, j, A_, Q, s_))
            return pair(i, j, A, P, x, moved)
        return lam('s_', sig(i, j, A_, Q), at)

    return pis(binders, type_), lams(binders, body)


# ---- identity type ------------------------------------------------------

def _eq_binders(i):
    return [
        ('A', T(i)), ('A_', lambda A: T(i)), ('AR', lambda A, A_: urtype(i, A, A_)),
        ('x', lambda A, A_, AR: A), ('x_', lambda A, A_, AR, x: A_),
        ('xr', lambda A, A_, AR, x, x_: app(ur_rel(i, A, A_, AR), x, x_)),
        ('y', lambda A, A_, AR, *_: A), ('y_', lambda A, A_, AR, *_: A_),
        ('yr', lambda A, A_, AR, x, x_, xr, y, y_: app(ur_rel(i, A, A_, AR), y, y_)),
    ]


def _R_eq(i):  # noqa: N802
    binders = [
        ('A', T(i)), ('A_', lambda A: T(i)), ('R', lambda A, A_: arrows(A, A_, T(i))),
        ('x', lambda A, A_, R: A), ('x_', lambda A, A_, R, x: A_),
        ('xr', lambda A, A_, R, x, x_: app(R, x, x_)),
        ('y', lambda A, A_, R, *_: A), ('y_', lambda A, A_, R, *_: A_),
        ('yr', lambda A, A_, R, x, x_, xr, y, y_: app(R, y, y_)),
    ]

    def type_(A, A_, R, x, x_, xr, y, y_, yr):
        return arrows(eq(i, A, x, y), eq(i, A_, x_, y_), T(i))

    def body(A, A_, R, x, x_, xr, y, y_, yr):
        def rel(p, q):
            moved = app(c('eq_rect', i, i), A, x, lam('z', A, lambda z: app(R, z, x_)), xr, y, p)
            moved = app(c('eq_rect', i, i), A_, x_, lam('z_', A_, lambda z_: app(R, y, z_)),
                        moved, y_, q)
            return eq(i, app(R, y, y_), moved, yr)
        return lams([('p', eq(i, A, x, y)), ('q', eq(i, A_, x_, y_))], rel)

    return pis(binders, type_), lams(binders, body)


def _eq_carriers(i, A, A_, x, x_, y, y_):
    return eq(i, A, x, y), eq(i, A_, x_, y_)


def _Equiv_eq(i):  # noqa: N802
    def type_(A, A_, AR, x, x_, xr, y, y_, yr):
        return equiv(i, *_eq_carriers(i, A, A_, x, x_, y, y_))
    return pis(_eq_binders(i), type_)


def _R_eq_applied(i, A, A_, AR, x, x_, xr, y, y_, yr):
    return app(c('R_eq', i), A, A_, ur_rel(i, A, A_, AR), x, x_, xr, y, y_, yr)


def _coh_eq(i):
    def type_(*params):
        A, A_, AR, x, x_, xr, y, y_, yr = params
        L, R = _eq_carriers(i, A, A_, x, x_, y, y_)
        return coh_ty(i, L, R, _R_eq_applied(i, *params), app(c('Equiv_eq', i), *params))
    return pis(_eq_binders(i), type_)


def _FP_eq(i):  # noqa: N802
    binders = _eq_binders(i)

    def type_(A, A_, AR, x, x_, xr, y, y_, yr):
        return urtype(i, *_eq_carriers(i, A, A_, x, x_, y, y_))

    def body(*params):
        A, A_, AR, x, x_, xr, y, y_, yr = params
        L, R = _eq_carriers(i, A, A_, x, x_, y, y_)
        return ur_pack(i, L, R, _R_eq_applied(i, *params), app(c('Equiv_eq', i), *params),
                       app(c('coh_eq', i), *params))

    return pis(binders, type_), lams(binders, body)


# ---- lists (level 0) ----------------------------------------------------

LIST = c('list', 0)


def _list_of(A):
    return app(LIST, A)


def _UR_list():  # noqa: N802
    binders = [('A', T(0)), ('A_', lambda A: T(0)), ('R', lambda A, A_: arrows(A, A_, T(0)))]

    def type_(A, A_, R):
        return arrows(_list_of(A), _list_of(A_), T(0))

    def body(A, A_, R):
        const_type = lam('_', _list_of(A_), lambda _: T(0))
        on_nil = lam('l_', _list_of(A_), lambda l_: app(
            c('list_rect', 0, 1), A_, const_type, unit,
            lams([('h_', A_), ('t_', _list_of(A_)), ('_', T(0))], lambda *_: Empty), l_))

        def on_cons(h, t, rec, l_):
            return app(
                c('list_rect', 0, 1), A_, const_type, Empty,
                lams([('h_', A_), ('t_', _list_of(A_)), ('_', T(0))],
                     lambda h_, t_, _: sig(0, 0, app(R, h, h_),
                                           lam('_', app(R, h, h_), lambda _: app(rec, t_)))),
                l_)

        motive = lam('_', _list_of(A), lambda _: arrow(_list_of(A_), T(0)))
        step = lams([('h', A), ('t', _list_of(A)), ('rec', arrow(_list_of(A_), T(0))),
                     ('l_', _list_of(A_))], on_cons)
        return lam('l', _list_of(A), lambda l: app(c('list_rect', 0, 1), A, motive, on_nil, step, l))

    return pis(binders, type_), lams(binders, body)


def _list_map():
    binders = [('A', T(0)), ('B', lambda A: T(0)), ('f', lambda A, B: arrow(A, B))]

    def type_(A, B, f):
        return arrow(_list_of(A), _list_of(B))

    def body(A, B, f):
        step = lams([('h', A), ('t', _list_of(A)), ('r', _list_of(B))],
                    lambda h, t, r: app(c('cons', 0), B, app(f, h), r))
        return lam('l', _list_of(A), lambda l: app(
            c('list_rect', 0, 0), A, lam('_', _list_of(A), lambda _: _list_of(B)),
            app(c('nil', 0), B), step, l))

    return pis(binders, type_), lams(binders, body)


def _list_binders():
    return [('A', T(0)), ('A_', lambda A: T(0)), ('AR', lambda A, A_: urtype(0, A, A_))]


def _list_maps(A, A_, AR):
    E = ur_equiv(0, A, A_, AR)
    fwd = app(c('list_map'), A, A_, e_fun(0, A, A_, E))
    inv = app(c('list_map'), A_, A, e_inv(0, A, A_, E))
    return fwd, inv


def _list_law(law):
    def type_(A, A_, AR):
        fwd, inv = _list_maps(A, A_, AR)
        L, R = _list_of(A), _list_of(A_)
        if law == 'sect':
            return sect_ty(0, L, fwd, inv)
        if law == 'retr':
            return retr_ty(0, R, fwd, inv)
        return adj_ty(0, L, R, fwd, inv, app(c('list_sect'), A, A_, AR), app(c('list_retr'), A, A_, AR))
    return pis(_list_binders(), type_)


def _Equiv_list():  # noqa: N802
    binders = _list_binders()

    def body(A, A_, AR):
        fwd, inv = _list_maps(A, A_, AR)
        return mk_equiv(0, _list_of(A), _list_of(A_), fwd, inv,
                        *(app(c(f'list_{law}'), A, A_, AR) for law in ('sect', 'retr', 'adj')))

    return pis(binders, lambda A, A_, AR: equiv(0, _list_of(A), _list_of(A_))), lams(binders, body)


def _list_rel(A, A_, AR):
    return app(c('UR_list'), A, A_, ur_rel(0, A, A_, AR))


def _coh_list():
    return pis(_list_binders(), lambda A, A_, AR: coh_ty(
        0, _list_of(A), _list_of(A_), _list_rel(A, A_, AR), app(c('Equiv_list'), A, A_, AR)))


def _FP_list():  # noqa: N802
    binders = _list_binders()
    type_ = pis(binders, lambda A, A_, AR: urtype(0, _list_of(A), _list_of(A_)))
    body = lams(binders, lambda A, A_, AR: ur_pack(
        0, _list_of(A), _list_of(A_), _list_rel(A, A_, AR), app(c('Equiv_list'), A, A_, AR),
        app(c('coh_list'), A, A_, AR)))
    return type_, body


def _base(name):
    return Declaration.mono(f'FP_{name}', urtype(0, c(name), c(name)), app(c('ur_id', 0), c(name)))


def _trusted_family(name, build, *, relies_on):
    return poly_opaque(name, 2, build, origin=Origin.TRUSTED, relies_on=relies_on)


def declarations():
    decls = [
        poly_define('Pi_rel', 2, _Pi_rel),
        poly_define('Pi_fwd', 2, _Pi_fwd),
        poly_define('Pi_inv', 2, _Pi_inv),
    ]
    for law in ('sect', 'retr', 'adj'):
        decls.append(_trusted_family(f'Pi_{law}', _opaque_law('Pi', law, _pi_left, _pi_right),
                                     relies_on=('funext',)))
    decls += [
        poly_define('Equiv_Pi', 2, _family_equiv('Pi', _pi_left, _pi_right)),
        _trusted_family('univ_Pi', _family_coh('Pi_rel', 'Equiv_Pi', _pi_left, _pi_right),
                        relies_on=('funext',)),
        poly_define('FP_forall', 2,
                    _family_pack('Pi_rel', 'Equiv_Pi', 'univ_Pi', _pi_left, _pi_right)),
        poly_define('R_Sigma', 2, _R_Sigma),
        poly_define('Sigma_fwd', 2, _Sigma_fwd),
        poly_define('Sigma_inv', 2, _Sigma_inv),
    ]
    # the Sigma, eq and list laws are proved by induction and path algebra, no axioms
    for law in ('sect', 'retr', 'adj'):
        decls.append(_trusted_family(f'Sigma_{law}',
                                     _opaque_law('Sigma', law, _sigma_left, _sigma_right),
                                     relies_on=()))
    decls += [
        poly_define('Equiv_Sigma', 2, _family_equiv('Sigma', _sigma_left, _sigma_right)),
        _trusted_family('coh_Sigma',
                        _family_coh('R_Sigma', 'Equiv_Sigma', _sigma_left, _sigma_right),
                        relies_on=()),
        poly_define('FP_Sigma', 2, _family_pack('R_Sigma', 'Equiv_Sigma', 'coh_Sigma',
                                                _sigma_left, _sigma_right)),
        poly_define('R_eq', 1, _R_eq),
        poly_opaque('Equiv_eq', 1, _Equiv_eq, origin=Origin.TRUSTED, relies_on=()),
        poly_opaque('coh_eq', 1, _coh_eq, origin=Origin.TRUSTED, relies_on=()),
        poly_define('FP_eq', 1, _FP_eq),
        Declaration.mono('UR_list', *_UR_list()),
        Declaration.mono('list_map', *_list_map()),
        Declaration.mono('list_sect', _list_law('sect'), origin=Origin.TRUSTED, relies_on=()),
        Declaration.mono('list_retr', _list_law('retr'), origin=Origin.TRUSTED, relies_on=()),
        Declaration.mono('list_adj', _list_law('adj'), origin=Origin.TRUSTED, relies_on=()),
        Declaration.mono('Equiv_list', *_Equiv_list()),
        Declaration.mono('coh_list', _coh_list(), origin=Origin.TRUSTED, relies_on=()),
        Declaration.mono('FP_list', *_FP_list()),
    ]
    decls += [_base(name) for name in BASE_TYPES]
    return decls


# built-ins without a computing witness: parametric by construction, related to
# themselves by a trusted constant whose type is computed by the translation
SELF_RELATED = {
    'nat_rect': 1, 'bool_rect': 1, 'positive_rect': 1, 'N_rect': 1, 'unit_rect': 1,
    'Empty_rect': 1, 'list_rect': 2, 'sigT_rect': 3, 'eq_rect': 2, 'sum_rect': 3,
    'nil': 1, 'cons': 1, 'existT': 2, 'eq_refl': 1, 'sum': 2, 'inl': 2, 'inr': 2,
    'lsl': 0, 'add16': 0, 'mul16': 0, 'int16_to_N': 0, 'int16_of_N': 0,
}
# in the plain parametricity translation type formers have no computing witness either
PARAM_SELF_RELATED = {**SELF_RELATED, 'list': 1, 'sigT': 2, 'eq': 1}


def self_relation_type(env, name: str, levels: tuple[int, ...], mode: str = 'uparam'):
    from core_kernel.env import GlobalContext
    from core_translate.translator import Translator

    head = c(name, *levels)
    relation = Translator(env, GlobalContext(), mode=mode).relation(env.lookup(name, levels).type)
    return app(relation, head, head)


def _self_relation(name, params, suffix, mode):
    def build(env, levels):
        return self_relation_type(env, name, levels, mode), None

    return Declaration.poly(f'{name}{suffix}', params, build, origin=Origin.TRUSTED, reducible=False)


def self_relation_declarations():
    decls = [_self_relation(name, params, '_ur', 'uparam') for name, params in SELF_RELATED.items()]
    decls += [_self_relation(name, params, '_pr', 'param')
              for name, params in PARAM_SELF_RELATED.items()]
    return decls
