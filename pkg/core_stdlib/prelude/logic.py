"""
Σ projections, equality combinators, equivalences and the univalent-relation
record, all encoded as nested ``sigT`` values.

``Equiv A B`` is ``Σ f. Σ g. Σ sect. Σ retr. adj`` and ``URType A B`` is
``Σ R. Σ e. coh``. Fields are read back with ``projT1``/``projT2`` chains. The
Python helpers below build applications of the declared constants and are
shared with the other prelude modules.
"""
from __future__ import annotations

from core_kernel.builder import app, arrow, arrows, c, lam, lams, pi, pis
from core_kernel.env import Origin
from core_kernel.terms import Term

from .common import T, eq, poly_define, poly_opaque, refl


# ---- term helpers -------------------------------------------------------

def sig(i: int, j: int, A: Term, B: Term) -> Term:
    return app(c('sigT', i, j), A, B)


def pair(i: int, j: int, A: Term, B: Term, a: Term, b: Term) -> Term:
    return app(c('existT', i, j), A, B, a, b)


def proj1(i: int, j: int, A: Term, B: Term, s: Term) -> Term:
    return app(c('projT1', i, j), A, B, s)


def proj2(i: int, j: int, A: Term, B: Term, s: Term) -> Term:
    return app(c('projT2', i, j), A, B, s)


def ap(i: int, j: int, A: Term, B: Term, f: Term, x: Term, y: Term, e: Term) -> Term:
    return app(c('ap', i, j), A, B, f, x, y, e)


def equiv(i: int, A: Term, B: Term) -> Term:
    return app(c('Equiv', i), A, B)


def e_fun(i: int, A: Term, B: Term, e: Term) -> Term:
    return app(c('e_fun', i), A, B, e)


def e_inv(i: int, A: Term, B: Term, e: Term) -> Term:
    return app(c('e_inv', i), A, B, e)


def urtype(i: int, A: Term, B: Term) -> Term:
    return app(c('URType', i), A, B)


def ur_rel(i: int, A: Term, B: Term, W: Term) -> Term:
    return app(c('ur_rel', i), A, B, W)


def ur_equiv(i: int, A: Term, B: Term, W: Term) -> Term:
    return app(c('ur_equiv', i), A, B, W)


def ur_refl_rel(i: int, A: Term, B: Term, W: Term, a: Term) -> Term:
    return app(c('ur_refl_rel', i), A, B, W, a)


def ur_retr_rel(i: int, A: Term, B: Term, W: Term, b: Term) -> Term:
    return app(c('ur_retr_rel', i), A, B, W, b)


def mk_equiv(i: int, A: Term, B: Term, f: Term, g: Term, s: Term, r: Term, adj: Term) -> Term:
    return app(c('mk_equiv', i), A, B, f, g, s, r, adj)


def ur_pack(i: int, A: Term, B: Term, R: Term, e: Term, coh: Term) -> Term:
    return app(c('ur_pack', i), A, B, R, e, coh)


# ---- field types of an equivalence --------------------------------------

def sect_ty(i, A, f, g):
    return pi('a', A, lambda a: eq(i, A, app(g, app(f, a)), a))


def retr_ty(i, B, f, g):
    return pi('b', B, lambda b: eq(i, B, app(f, app(g, b)), b))


def adj_ty(i, A, B, f, g, s, r):
    def field(a):
        fa = app(f, a)
        gfa = app(g, fa)
        return eq(i, eq(i, B, app(f, gfa), fa), app(r, fa), ap(i, i, A, B, f, gfa, a, app(s, a)))

    return pi('a', A, field)


def coh_ty(i, A, B, R, e):
    """``Π a a', (a = a') ≃ R a (e a')``."""
    return pis([('a', A), ('a_', A)],
               lambda a, a_: equiv(i, eq(i, A, a, a_), app(R, a, app(e_fun(i, A, B, e), a_))))


# families of the nested Σ encoding
def _fam_adj(i, A, B, f, g, s):
    return lam('r', retr_ty(i, B, f, g), lambda r: adj_ty(i, A, B, f, g, s, r))


def _fam_retr(i, A, B, f, g):
    return lam('s', sect_ty(i, A, f, g),
               lambda s: sig(i, i, retr_ty(i, B, f, g), _fam_adj(i, A, B, f, g, s)))


def _fam_sect(i, A, B, f):
    return lam('g', arrow(B, A),
               lambda g: sig(i, i, sect_ty(i, A, f, g), _fam_retr(i, A, B, f, g)))


def _fam_inv(i, A, B):
    return lam('f', arrow(A, B), lambda f: sig(i, i, arrow(B, A), _fam_sect(i, A, B, f)))


def _equiv_body(i, A, B):
    return sig(i, i, arrow(A, B), _fam_inv(i, A, B))


class _Fields:
    """Inline projections out of ``e : Equiv A B``."""

    def __init__(self, i, A, B, e):
        p1 = lambda X, F, s: app(c('projT1', i, i), X, F, s)  # noqa: E731
        p2 = lambda X, F, s: app(c('projT2', i, i), X, F, s)  # noqa: E731
        fam1 = _fam_inv(i, A, B)
        self.fun = p1(arrow(A, B), fam1, e)
        rest1 = p2(arrow(A, B), fam1, e)
        fam2 = _fam_sect(i, A, B, self.fun)
        self.inv = p1(arrow(B, A), fam2, rest1)
        rest2 = p2(arrow(B, A), fam2, rest1)
        fam3 = _fam_retr(i, A, B, self.fun, self.inv)
        self.sect = p1(sect_ty(i, A, self.fun, self.inv), fam3, rest2)
        rest3 = p2(sect_ty(i, A, self.fun, self.inv), fam3, rest2)
        fam4 = _fam_adj(i, A, B, self.fun, self.inv, self.sect)
        self.retr = p1(retr_ty(i, B, self.fun, self.inv), fam4, rest3)
        self.adj = p2(retr_ty(i, B, self.fun, self.inv), fam4, rest3)


def _equiv_params(i):
    return [('A', T(i)), ('B', lambda A: T(i)), ('e', lambda A, B: equiv(i, A, B))]


def _accessor(name, field, type_of):
    def build(i):
        binders = _equiv_params(i)
        type_ = pis(binders, lambda A, B, e: type_of(i, A, B, e))
        body = lams(binders, lambda A, B, e: getattr(_Fields(i, A, B, e), field))
        return type_, body
    return poly_define(name, 1, build)


def _fun_ty(i, A, B, e):
    return arrow(A, B)


def _inv_ty(i, A, B, e):
    return arrow(B, A)


def _sect_field_ty(i, A, B, e):
    return sect_ty(i, A, e_fun(i, A, B, e), e_inv(i, A, B, e))


def _retr_field_ty(i, A, B, e):
    return retr_ty(i, B, e_fun(i, A, B, e), e_inv(i, A, B, e))


def _adj_field_ty(i, A, B, e):
    return adj_ty(i, A, B, e_fun(i, A, B, e), e_inv(i, A, B, e),
                  app(c('e_sect', i), A, B, e), app(c('e_retr', i), A, B, e))


# ---- universe relation record -------------------------------------------

def _coh_fam(i, A, B, R):
    return lam('e', equiv(i, A, B), lambda e: coh_ty(i, A, B, R, e))


def _rel_fam(i, A, B):
    return lam('R', arrows(A, B, T(i)), lambda R: sig(i, i, equiv(i, A, B), _coh_fam(i, A, B, R)))


def _urtype_body(i, A, B):
    return sig(i + 1, i, arrows(A, B, T(i)), _rel_fam(i, A, B))


def _ur_params(i):
    return [('A', T(i)), ('B', lambda A: T(i)), ('W', lambda A, B: urtype(i, A, B))]


class _URFields:
    def __init__(self, i, A, B, W):
        relty = arrows(A, B, T(i))
        fam = _rel_fam(i, A, B)
        self.rel = app(c('projT1', i + 1, i), relty, fam, W)
        rest = app(c('projT2', i + 1, i), relty, fam, W)
        cfam = _coh_fam(i, A, B, self.rel)
        self.equiv = app(c('projT1', i, i), equiv(i, A, B), cfam, rest)
        self.coh = app(c('projT2', i, i), equiv(i, A, B), cfam, rest)


def _ur_accessor(name, field, type_of):
    def build(i):
        binders = _ur_params(i)
        type_ = pis(binders, lambda A, B, W: type_of(i, A, B, W))
        body = lams(binders, lambda A, B, W: getattr(_URFields(i, A, B, W), field))
        return type_, body
    return poly_define(name, 1, build)


# ---- declarations -------------------------------------------------------

def _projT1(i, j):  # noqa: N802
    binders = [('A', T(i)), ('B', lambda A: arrow(A, T(j))), ('s', lambda A, B: sig(i, j, A, B))]
    type_ = pis(binders, lambda A, B, s: A)
    body = lams(binders, lambda A, B, s: app(
        c('sigT_rect', i, j, i), A, B, lam('_', sig(i, j, A, B), lambda _: A),
        lams([('a', A), ('b', lambda a: app(B, a))], lambda a, b: a), s))
    return type_, body


def _projT2(i, j):  # noqa: N802
    binders = [('A', T(i)), ('B', lambda A: arrow(A, T(j))), ('s', lambda A, B: sig(i, j, A, B))]
    type_ = pis(binders, lambda A, B, s: app(B, proj1(i, j, A, B, s)))
    body = lams(binders, lambda A, B, s: app(
        c('sigT_rect', i, j, j), A, B,
        lam('s', sig(i, j, A, B), lambda s_: app(B, proj1(i, j, A, B, s_))),
        lams([('a', A), ('b', lambda a: app(B, a))], lambda a, b: b), s))
    return type_, body


def _ap(i, j):
    binders = [('A', T(i)), ('B', lambda A: T(j)), ('f', lambda A, B: arrow(A, B)),
               ('x', lambda A, B, f: A), ('y', lambda A, B, f, x: A),
               ('e', lambda A, B, f, x, y: eq(i, A, x, y))]
    type_ = pis(binders, lambda A, B, f, x, y, e: eq(j, B, app(f, x), app(f, y)))
    body = lams(binders, lambda A, B, f, x, y, e: app(
        c('eq_rect', i, j), A, x, lam('z', A, lambda z: eq(j, B, app(f, x), app(f, z))),
        refl(j, B, app(f, x)), y, e))
    return type_, body


def _eq_sym(i):
    binders = [('A', T(i)), ('x', lambda A: A), ('y', lambda A, x: A),
               ('e', lambda A, x, y: eq(i, A, x, y))]
    type_ = pis(binders, lambda A, x, y, e: eq(i, A, y, x))
    body = lams(binders, lambda A, x, y, e: app(
        c('eq_rect', i, i), A, x, lam('z', A, lambda z: eq(i, A, z, x)), refl(i, A, x), y, e))
    return type_, body


def _eq_trans(i):
    binders = [('A', T(i)), ('x', lambda A: A), ('y', lambda A, x: A), ('z', lambda A, x, y: A),
               ('e1', lambda A, x, y, z: eq(i, A, x, y)),
               ('e2', lambda A, x, y, z, e1: eq(i, A, y, z))]
    type_ = pis(binders, lambda A, x, y, z, e1, e2: eq(i, A, x, z))
    body = lams(binders, lambda A, x, y, z, e1, e2: app(
        c('eq_rect', i, i), A, y, lam('w', A, lambda w: eq(i, A, x, w)), e1, z, e2))
    return type_, body


def _Equiv(i):  # noqa: N802
    binders = [('A', T(i)), ('B', lambda A: T(i))]
    return pis(binders, lambda A, B: T(i)), lams(binders, lambda A, B: _equiv_body(i, A, B))


def _mk_equiv(i):
    binders = [('A', T(i)), ('B', lambda A: T(i)),
               ('f', lambda A, B: arrow(A, B)), ('g', lambda A, B, f: arrow(B, A)),
               ('s', lambda A, B, f, g: sect_ty(i, A, f, g)),
               ('r', lambda A, B, f, g, s: retr_ty(i, B, f, g)),
               ('adj', lambda A, B, f, g, s, r: adj_ty(i, A, B, f, g, s, r))]
    type_ = pis(binders, lambda A, B, *_: equiv(i, A, B))

    def body(A, B, f, g, s, r, adj):
        inner = pair(i, i, retr_ty(i, B, f, g), _fam_adj(i, A, B, f, g, s), r, adj)
        inner = pair(i, i, sect_ty(i, A, f, g), _fam_retr(i, A, B, f, g), s, inner)
        inner = pair(i, i, arrow(B, A), _fam_sect(i, A, B, f), g, inner)
        return pair(i, i, arrow(A, B), _fam_inv(i, A, B), f, inner)

    return type_, lams(binders, body)


def _id_equiv(i):
    def body(A):
        ident = lam('a', A, lambda a: a)
        rfl = lam('a', A, lambda a: refl(i, A, a))
        adj = lam('a', A, lambda a: refl(i, eq(i, A, a, a), refl(i, A, a)))
        return mk_equiv(i, A, A, ident, ident, rfl, rfl, adj)

    return pi('A', T(i), lambda A: equiv(i, A, A)), lam('A', T(i), body)


def _equiv_sym_adj(i):
    def field(A, B, e):
        f, g = e_fun(i, A, B, e), e_inv(i, A, B, e)
        return adj_ty(i, B, A, g, f, app(c('e_retr', i), A, B, e), app(c('e_sect', i), A, B, e))

    return pis(_equiv_params(i), field)


def _equiv_sym(i):
    binders = _equiv_params(i)
    type_ = pis(binders, lambda A, B, e: equiv(i, B, A))
    body = lams(binders, lambda A, B, e: mk_equiv(
        i, B, A, e_inv(i, A, B, e), e_fun(i, A, B, e), app(c('e_retr', i), A, B, e),
        app(c('e_sect', i), A, B, e), app(c('equiv_sym_adj', i), A, B, e)))
    return type_, body


def _URType(i):  # noqa: N802
    binders = [('A', T(i)), ('B', lambda A: T(i))]
    return pis(binders, lambda A, B: T(i + 1)), lams(binders, lambda A, B: _urtype_body(i, A, B))


def _ur_pack(i):
    binders = [('A', T(i)), ('B', lambda A: T(i)), ('R', lambda A, B: arrows(A, B, T(i))),
               ('e', lambda A, B, R: equiv(i, A, B)),
               ('coh', lambda A, B, R, e: coh_ty(i, A, B, R, e))]
    type_ = pis(binders, lambda A, B, *_: urtype(i, A, B))
    body = lams(binders, lambda A, B, R, e, coh: pair(
        i + 1, i, arrows(A, B, T(i)), _rel_fam(i, A, B), R,
        pair(i, i, equiv(i, A, B), _coh_fam(i, A, B, R), e, coh)))
    return type_, body


def _rel_ty(i, A, B, W):
    return arrows(A, B, T(i))


def _equiv_field_ty(i, A, B, W):
    return equiv(i, A, B)


def _coh_field_ty(i, A, B, W):
    return coh_ty(i, A, B, ur_rel(i, A, B, W), ur_equiv(i, A, B, W))


def _ur_refl_rel(i):
    binders = _ur_params(i) + [('a', lambda A, B, W: A)]

    def type_(A, B, W, a):
        return app(ur_rel(i, A, B, W), a, app(e_fun(i, A, B, ur_equiv(i, A, B, W)), a))

    def body(A, B, W, a):
        E = ur_equiv(i, A, B, W)
        target = app(ur_rel(i, A, B, W), a, app(e_fun(i, A, B, E), a))
        coh = app(c('ur_coh', i), A, B, W, a, a)
        return app(e_fun(i, eq(i, A, a, a), target, coh), refl(i, A, a))

    return pis(binders, type_), lams(binders, body)


def _ur_retr_rel(i):
    binders = _ur_params(i) + [('b', lambda A, B, W: B)]

    def type_(A, B, W, b):
        return app(ur_rel(i, A, B, W), app(e_inv(i, A, B, ur_equiv(i, A, B, W)), b), b)

    def body(A, B, W, b):
        E = ur_equiv(i, A, B, W)
        x = app(e_inv(i, A, B, E), b)
        return app(
            c('eq_rect', i, i), B, app(e_fun(i, A, B, E), x),
            lam('y', B, lambda y: app(ur_rel(i, A, B, W), x, y)),
            ur_refl_rel(i, A, B, W, x), b, app(c('e_retr', i), A, B, E, b))

    return pis(binders, type_), lams(binders, body)


def _ur_id(i):
    def body(A):
        rel = lams([('a', A), ('b', A)], lambda a, b: eq(i, A, a, b))
        coh = lams([('a', A), ('a_', A)], lambda a, a_: app(c('id_equiv', i), eq(i, A, a, a_)))
        return ur_pack(i, A, A, rel, app(c('id_equiv', i), A), coh)

    return pi('A', T(i), lambda A: urtype(i, A, A)), lam('A', T(i), body)


def _ur_sym_coh(i):
    def field(A, B, W):
        back = app(c('equiv_sym', i), A, B, ur_equiv(i, A, B, W))
        return pis([('b', B), ('b_', B)], lambda b, b_: equiv(
            i, eq(i, B, b, b_), app(ur_rel(i, A, B, W), app(e_fun(i, B, A, back), b_), b)))

    return pis(_ur_params(i), field)


def _ur_sym(i):
    binders = _ur_params(i)
    type_ = pis(binders, lambda A, B, W: urtype(i, B, A))

    def body(A, B, W):
        rel = lams([('b', B), ('a', A)], lambda b, a: app(ur_rel(i, A, B, W), a, b))
        return ur_pack(i, B, A, rel, app(c('equiv_sym', i), A, B, ur_equiv(i, A, B, W)),
                       app(c('ur_sym_coh', i), A, B, W))

    return type_, lams(binders, body)


def _univalence(i):
    return pis([('A', T(i)), ('B', lambda A: T(i))],
               lambda A, B: arrow(equiv(i, A, B), eq(i + 1, T(i), A, B)))


def _funext(i, j):
    k = max(i, j)

    def field(A, B, f, g):
        pointwise = pi('a', A, lambda a: eq(j, app(B, a), app(f, a), app(g, a)))
        return arrow(pointwise, eq(k, pi('a', A, lambda a: app(B, a)), f, g))

    dep = lambda A, B: pi('a', A, lambda a: app(B, a))  # noqa: E731
    return pis([('A', T(i)), ('B', lambda A: arrow(A, T(j))),
                ('f', dep), ('g', lambda A, B, f: dep(A, B))], field)


def _univ_Type(i):  # noqa: N802
    return pis([('A', T(i)), ('A_', lambda A: T(i))],
               lambda A, A_: equiv(i + 1, eq(i + 1, T(i), A, A_), urtype(i, A, A_)))


def _FP_Type(i):  # noqa: N802
    type_ = urtype(i + 1, T(i), T(i))
    body = ur_pack(i + 1, T(i), T(i), c('URType', i), app(c('id_equiv', i + 1), T(i)),
                   c('univ_Type', i))
    return type_, body


def declarations():
    return [
        poly_define('projT1', 2, _projT1),
        poly_define('projT2', 2, _projT2),
        poly_define('ap', 2, _ap),
        poly_define('eq_sym', 1, _eq_sym),
        poly_define('eq_trans', 1, _eq_trans),
        poly_define('Equiv', 1, _Equiv),
        _accessor('e_fun', 'fun', _fun_ty),
        _accessor('e_inv', 'inv', _inv_ty),
        _accessor('e_sect', 'sect', _sect_field_ty),
        _accessor('e_retr', 'retr', _retr_field_ty),
        _accessor('e_adj', 'adj', _adj_field_ty),
        poly_define('mk_equiv', 1, _mk_equiv),
        poly_define('id_equiv', 1, _id_equiv),
        poly_opaque('equiv_sym_adj', 1, _equiv_sym_adj, origin=Origin.TRUSTED),
        poly_define('equiv_sym', 1, _equiv_sym),
        poly_define('URType', 1, _URType),
        poly_define('ur_pack', 1, _ur_pack),
        _ur_accessor('ur_rel', 'rel', _rel_ty),
        _ur_accessor('ur_equiv', 'equiv', _equiv_field_ty),
        _ur_accessor('ur_coh', 'coh', _coh_field_ty),
        poly_define('ur_refl_rel', 1, _ur_refl_rel),
        poly_define('ur_retr_rel', 1, _ur_retr_rel),
        poly_define('ur_id', 1, _ur_id),
        poly_opaque('ur_sym_coh', 1, _ur_sym_coh, origin=Origin.TRUSTED),
        poly_define('ur_sym', 1, _ur_sym),
        poly_opaque('univalence', 1, _univalence, origin=Origin.AXIOM),
        poly_opaque('funext', 2, _funext, origin=Origin.AXIOM),
        poly_opaque('univ_Type', 1, _univ_Type, origin=Origin.TRUSTED, relies_on=('univalence',)),
        poly_define('FP_Type', 1, _FP_Type),
    ]
