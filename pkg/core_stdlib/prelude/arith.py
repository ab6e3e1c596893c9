"""
Unary and binary arithmetic, the nat ≃ N equivalence and the lemmas relating
unary operations to their binary counterparts.

Every operation is an eliminator program so it computes in the kernel; the
binary ones run in time logarithmic in their arguments.
"""
from __future__ import annotations

from core_kernel.builder import app, arrow, arrows, c, lam, lams, pis

from .common import (
    N, N0, Npos, O, S, T, bool_, define, eq, false, nat, positive, refl, true, trusted, tt, unit,
    xH, xI, xO,
)
from .logic import adj_ty, coh_ty, mk_equiv

SR = app(c('sum', 0, 0), N, unit)


def nat_rect(P, p0, pS, n, k=0):
    return app(c('nat_rect', k), P, p0, pS, n)


def pos_rect(P, fI, fO, fH, p):
    return app(c('positive_rect', 0), P, fI, fO, fH, p)


def N_rect(P, f0, fpos, n):  # noqa: N802
    return app(c('N_rect', 0), P, f0, fpos, n)


def bool_rect(P, t, f, b):
    return app(c('bool_rect', 0), P, t, f, b)


def const(domain, value):
    return lam('_', domain, lambda _: value)


def _binop(ty, fn):
    return lams([('n', ty), ('m', ty)], fn)


def _step(ty, rec_ty, fn):
    """``λ p r. fn p r`` for eliminator steps."""
    return lams([('p', ty), ('r', rec_ty)], fn)


# ---- unary --------------------------------------------------------------

def _unary():
    nn = const(nat, nat)
    plus = _binop(nat, lambda n, m: nat_rect(nn, m, _step(nat, nat, lambda p, r: app(S, r)), n))
    mult = _binop(nat, lambda n, m: nat_rect(
        nn, O, _step(nat, nat, lambda p, r: app(c('plus'), m, r)), n))
    pow_ = _binop(nat, lambda n, m: nat_rect(
        nn, app(S, O), _step(nat, nat, lambda p, r: app(c('mult'), n, r)), m))
    pred = lam('n', nat, lambda n: nat_rect(nn, O, _step(nat, nat, lambda p, r: p), n))
    minus = _binop(nat, lambda n, m: nat_rect(
        nn, n, _step(nat, nat, lambda p, r: app(c('pred'), r)), m))

    def leb_step(p, r):
        return lam('m', nat, lambda m: nat_rect(
            const(nat, bool_), false, lams([('m_', nat), ('_', bool_)], lambda m_, _: app(r, m_)), m))

    leb = _binop(nat, lambda n, m: app(nat_rect(
        const(nat, arrow(nat, bool_)), const(nat, true),
        _step(nat, arrow(nat, bool_), leb_step), n), m))
    nat2 = arrows(nat, nat, nat)
    return [
        define('plus', nat2, plus),
        define('mult', nat2, mult),
        define('pow', nat2, pow_),
        define('pred', arrow(nat, nat), pred),
        define('minus', nat2, minus),
        define('leb_nat', arrows(nat, nat, bool_), leb),
    ]


# ---- binary -------------------------------------------------------------

def _succ():
    pp = const(positive, positive)
    succ_pos = lam('p', positive, lambda p: pos_rect(
        pp, _step(positive, positive, lambda q, r: app(xO, r)),
        _step(positive, positive, lambda q, r: app(xI, q)), app(xO, xH), p))
    succ_N = lam('n', N, lambda n: N_rect(  # noqa: N806
        const(N, N), app(Npos, xH), lam('p', positive, lambda p: app(Npos, app(c('succ_pos'), p))), n))
    return [
        define('succ_pos', arrow(positive, positive), succ_pos),
        define('succ_N', arrow(N, N), succ_N),
    ]


def _add():
    pp = const(positive, positive)
    carry_ty = arrows(bool_, positive, positive)
    succ = lambda p: app(c('succ_pos'), p)  # noqa: E731

    def on_carry(c_, if_set, if_clear):
        return bool_rect(const(bool_, positive), if_set, if_clear, c_)

    def cases(on_I, on_O, on_H):
        return lams([('p', positive), ('r', carry_ty), ('c', bool_), ('y', positive)],
                    lambda p, r, c_, y: pos_rect(
                        pp,
                        _step(positive, positive, lambda q, _: on_I(p, r, c_, q)),
                        _step(positive, positive, lambda q, _: on_O(p, r, c_, q)),
                        on_H(p, r, c_), y))

    f_I = cases(
        lambda p, r, c_, q: on_carry(c_, app(xI, app(r, true, q)), app(xO, app(r, true, q))),
        lambda p, r, c_, q: on_carry(c_, app(xO, app(r, true, q)), app(xI, app(r, false, q))),
        lambda p, r, c_: on_carry(c_, app(xI, succ(p)), app(xO, succ(p))),
    )
    f_O = cases(
        lambda p, r, c_, q: on_carry(c_, app(xO, app(r, true, q)), app(xI, app(r, false, q))),
        lambda p, r, c_, q: on_carry(c_, app(xI, app(r, false, q)), app(xO, app(r, false, q))),
        lambda p, r, c_: on_carry(c_, app(xO, succ(p)), app(xI, p)),
    )
    f_H = lams([('c', bool_), ('y', positive)],
               lambda c_, y: on_carry(c_, succ(succ(y)), succ(y)))
    add_c = lams([('c', bool_), ('x', positive), ('y', positive)],
                 lambda c_, x, y: app(pos_rect(const(positive, carry_ty), f_I, f_O, f_H, x), c_, y))
    add = _binop(positive, lambda x, y: app(c('add_pos_c'), false, x, y))
    plus_N = _binop(N, lambda n, m: N_rect(  # noqa: N806
        const(N, N), m,
        lam('p', positive, lambda p: N_rect(
            const(N, N), app(Npos, p),
            lam('q', positive, lambda q: app(Npos, app(c('add_pos'), p, q))), m)),
        n))
    return [
        define('add_pos_c', arrows(bool_, positive, positive, positive), add_c),
        define('add_pos', arrows(positive, positive, positive), add),
        define('plus_N', arrows(N, N, N), plus_N),
    ]


def _mult():
    mult_pos = lams([('x', positive), ('y', positive)], lambda x, y: pos_rect(
        const(positive, positive),
        _step(positive, positive, lambda p, r: app(c('add_pos'), y, app(xO, r))),
        _step(positive, positive, lambda p, r: app(xO, r)),
        y, x))
    mult_N = _binop(N, lambda n, m: N_rect(  # noqa: N806
        const(N, N), N0,
        lam('p', positive, lambda p: N_rect(
            const(N, N), N0, lam('q', positive, lambda q: app(Npos, app(c('mult_pos'), p, q))), m)),
        n))
    square = lambda r: app(c('mult_N'), r, r)  # noqa: E731
    pow_pos = lams([('x', N), ('p', positive)], lambda x, p: pos_rect(
        const(positive, N),
        _step(positive, N, lambda q, r: app(c('mult_N'), x, square(r))),
        _step(positive, N, lambda q, r: square(r)),
        x, p))
    pow_N = _binop(N, lambda n, m: N_rect(  # noqa: N806
        const(N, N), app(Npos, xH), lam('p', positive, lambda p: app(c('pow_pos'), n, p)), m))
    return [
        define('mult_pos', arrows(positive, positive, positive), mult_pos),
        define('mult_N', arrows(N, N, N), mult_N),
        define('pow_pos', arrows(N, positive, N), pow_pos),
        define('pow_N', arrows(N, N, N), pow_N),
    ]


def _sub():
    inl = lambda n: app(c('inl', 0, 0), N, unit, n)  # noqa: E731
    inr = app(c('inr', 0, 0), N, unit, tt)
    double_N = lam('n', N, lambda n: N_rect(  # noqa: N806
        const(N, N), N0, lam('p', positive, lambda p: app(Npos, app(xO, p))), n))
    succ_double_N = lam('n', N, lambda n: N_rect(  # noqa: N806
        const(N, N), app(Npos, xH), lam('p', positive, lambda p: app(Npos, app(xI, p))), n))

    def lift(fn_name):
        return lam('s', SR, lambda s: app(
            c('sum_rect', 0, 0, 0), N, unit, const(SR, SR),
            lam('d', N, lambda d: inl(app(c(fn_name), d))), const(unit, inr), s))

    dbl = lambda s: app(c('sub_dbl'), s)  # noqa: E731
    dbl1 = lambda s: app(c('sub_dbl1'), s)  # noqa: E731
    borrow_ty = arrows(bool_, positive, SR)

    def on_borrow(b, if_set, if_clear):
        return bool_rect(const(bool_, SR), if_set, if_clear, b)

    def cases(on_I, on_O, on_H):
        return lams([('p', positive), ('r', borrow_ty), ('b', bool_), ('y', positive)],
                    lambda p, r, b, y: pos_rect(
                        const(positive, SR),
                        _step(positive, SR, lambda q, _: on_I(p, r, b, q)),
                        _step(positive, SR, lambda q, _: on_O(p, r, b, q)),
                        on_H(p, r, b), y))

    g_I = cases(
        lambda p, r, b, q: on_borrow(b, dbl1(app(r, true, q)), dbl(app(r, false, q))),
        lambda p, r, b, q: on_borrow(b, dbl(app(r, false, q)), dbl1(app(r, false, q))),
        lambda p, r, b: on_borrow(b, dbl1(app(r, false, xH)), inl(app(Npos, app(xO, p)))),
    )
    g_O = cases(
        lambda p, r, b, q: on_borrow(b, dbl(app(r, true, q)), dbl1(app(r, true, q))),
        lambda p, r, b, q: on_borrow(b, dbl1(app(r, true, q)), dbl(app(r, false, q))),
        lambda p, r, b: on_borrow(b, dbl(app(r, false, xH)), dbl1(app(r, false, xH))),
    )
    g_H = lams([('b', bool_), ('y', positive)], lambda b, y: pos_rect(
        const(positive, SR), _step(positive, SR, lambda q, _: inr), _step(positive, SR, lambda q, _: inr),
        on_borrow(b, inr, inl(N0)), y))
    sub_c = lams([('b', bool_), ('x', positive), ('y', positive)],
                 lambda b, x, y: app(pos_rect(const(positive, borrow_ty), g_I, g_O, g_H, x), b, y))
    clamp = lambda s: app(c('sum_rect', 0, 0, 0), N, unit, const(SR, N),  # noqa: E731
                          lam('d', N, lambda d: d), const(unit, N0), s)
    minus_N = _binop(N, lambda n, m: N_rect(  # noqa: N806
        const(N, N), N0,
        lam('p', positive, lambda p: N_rect(
            const(N, N), app(Npos, p),
            lam('q', positive, lambda q: clamp(app(c('sub_pos_c'), false, p, q))), m)),
        n))
    leb_N = _binop(N, lambda n, m: N_rect(  # noqa: N806
        const(N, bool_), true, const(positive, false), app(c('minus_N'), n, m)))
    return [
        define('double_N', arrow(N, N), double_N),
        define('succ_double_N', arrow(N, N), succ_double_N),
        define('sub_dbl', arrow(SR, SR), lift('double_N')),
        define('sub_dbl1', arrow(SR, SR), lift('succ_double_N')),
        define('sub_pos_c', arrows(bool_, positive, positive, SR), sub_c),
        define('minus_N', arrows(N, N, N), minus_N),
        define('leb_N', arrows(N, N, bool_), leb_N),
    ]


# ---- nat ≃ N ------------------------------------------------------------

def _conversions():
    to_N = lam('n', nat, lambda n: nat_rect(  # noqa: N806
        const(nat, N), N0, _step(nat, N, lambda p, r: app(c('succ_N'), r)), n))
    twice = lambda r: app(c('plus'), r, r)  # noqa: E731
    of_pos = lam('p', positive, lambda p: pos_rect(
        const(positive, nat),
        _step(positive, nat, lambda q, r: app(S, twice(r))),
        _step(positive, nat, lambda q, r: twice(r)),
        app(S, O), p))
    of_N = lam('n', N, lambda n: N_rect(  # noqa: N806
        const(N, nat), O, lam('p', positive, lambda p: app(c('of_pos'), p)), n))
    return [
        define('to_N', arrow(nat, N), to_N),
        define('of_pos', arrow(positive, nat), of_pos),
        define('of_N', arrow(N, nat), of_N),
    ]


TO_N, OF_N = c('to_N'), c('of_N')


def _equivalence():
    sect = pis([('n', nat)], lambda n: eq(0, nat, app(OF_N, app(TO_N, n)), n))
    retr = pis([('m', N)], lambda m: eq(0, N, app(TO_N, app(OF_N, m)), m))
    adj = adj_ty(0, nat, N, TO_N, OF_N, c('sect_nat_N'), c('retr_nat_N'))
    equiv = mk_equiv(0, nat, N, TO_N, OF_N, c('sect_nat_N'), c('retr_nat_N'), c('adj_nat_N'))
    rel = lams([('n', nat), ('m', N)], lambda n, m: eq(0, nat, n, app(OF_N, m)))
    return [
        trusted('sect_nat_N', sect),
        trusted('retr_nat_N', retr),
        trusted('adj_nat_N', adj),
        define('equiv_nat_N', app(c('Equiv', 0), nat, N), equiv),
        define('R_nat_N', arrows(nat, N, T(0)), rel),
        trusted('coh_nat_N', coh_ty(0, nat, N, c('R_nat_N'), c('equiv_nat_N'))),
    ]


def related(n, n_):
    """``n`` and ``n_`` related by the nat/N relation."""
    return eq(0, nat, n, app(OF_N, n_))


def _op_lemma(name, op, op_N, result='nat'):  # noqa: N803
    def type_(n, n_, nr, m, m_, mr):
        lhs, rhs = app(c(op), n, m), app(c(op_N), n_, m_)
        return related(lhs, rhs) if result == 'nat' else eq(0, bool_, lhs, rhs)

    return trusted(name, pis(
        [('n', nat), ('n_', N), ('nr', lambda n, n_: related(n, n_)),
         ('m', nat), ('m_', N), ('mr', lambda n, n_, nr, m, m_: related(m, m_))], type_))


def _relation_lemmas():
    S_R = trusted('S_R', pis(  # noqa: N806
        [('n', nat), ('n_', N), ('nr', lambda n, n_: related(n, n_))],
        lambda n, n_, nr: related(app(S, n), app(c('succ_N'), n_))))
    return [
        define('O_R', related(O, N0), refl(0, nat, O)),
        S_R,
        _op_lemma('plus_R', 'plus', 'plus_N'),
        _op_lemma('mult_R', 'mult', 'mult_N'),
        _op_lemma('pow_R', 'pow', 'pow_N'),
        _op_lemma('minus_R', 'minus', 'minus_N'),
        _op_lemma('leb_R', 'leb_nat', 'leb_N', result='bool'),
    ]


def declarations():
    return (_unary() + _succ() + _add() + _mult() + _sub() + _conversions() + _equivalence()
            + _relation_lemmas())
