# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled speed kernel: the hot path behind qslt.kernel.

Twin of qslt._speed_fallback (same element tables, same adaptive-Simpson
recursion as qslt.quadrature); keep the three in sync. Works entirely on C
doubles so the quadrature loop runs without the GIL.
"""

from libc.math cimport fabs, sqrt

KIND_DPC = 0
KIND_BFC = 1
KIND_BPFC = 2
KIND_PFC = 3


cdef struct Table:
    int n
    int ii[16]
    int jj[16]
    double w[16]
    double c0[16]
    double c1[16]
    double c2[16]


cdef inline void _put(Table* t, int k, int i, int j, double w,
                      double c0, double c1, double c2) noexcept nogil:
    t.ii[k] = i
    t.jj[k] = j
    t.w[k] = w
    t.c0[k] = c0
    t.c1[k] = c1
    t.c2[k] = c2


cdef int _fill_table(int kind, double alpha, double m, Table* t) except -1 nogil:
    cdef double a2 = alpha * alpha
    cdef double b2 = 1.0 - a2
    cdef double m2 = m * m
    cdef double n2 = 1.0 - m2
    cdef double am = a2 * m2
    cdef double an = a2 * n2
    cdef double x = alpha * sqrt(b2) * m
    cdef double sg, anb, s

    if kind == 3:  # phase flip
        t.n = 4
        _put(t, 0, 0, 0, 1.0, am, 0.0, 0.0)
        _put(t, 1, 1, 1, 1.0, an, 0.0, 0.0)
        _put(t, 2, 7, 7, 1.0, b2, 0.0, 0.0)
        _put(t, 3, 0, 7, 2.0, x, -4.0 * x, 4.0 * x)
        return 0

    if kind == 1 or kind == 2:  # bit flip / bit-phase flip
        sg = -1.0 if kind == 2 else 1.0
        anb = an + b2
        t.n = 12
        _put(t, 0, 0, 0, 1.0, 0.0, 0.0, am)
        _put(t, 1, 1, 1, 1.0, b2, -2.0 * b2, an + b2)
        _put(t, 2, 2, 2, 1.0, 0.0, am, -am)
        _put(t, 3, 3, 3, 1.0, 0.0, anb, -anb)
        _put(t, 4, 4, 4, 1.0, 0.0, am, -am)
        _put(t, 5, 5, 5, 1.0, 0.0, anb, -anb)
        _put(t, 6, 6, 6, 1.0, am, -2.0 * am, am)
        _put(t, 7, 7, 7, 1.0, an, -2.0 * an, an + b2)
        _put(t, 8, 0, 7, 2.0, 0.0, 0.0, x)
        _put(t, 9, 1, 6, 2.0, x, -2.0 * x, x)
        _put(t, 10, 2, 5, 2.0, 0.0, sg * x, -sg * x)
        _put(t, 11, 3, 4, 2.0, 0.0, sg * x, -sg * x)
        return 0

    if kind == 0:  # depolarizing
        s = 1.0 / 9.0
        anb = an + b2
        t.n = 9
        _put(t, 0, 0, 0, 1.0, am * s, 4.0 * am * s, 4.0 * am * s)
        _put(t, 1, 1, 1, 1.0, (an + 4.0 * b2) * s, (4.0 * an - 8.0 * b2) * s,
             (4.0 * an + 4.0 * b2) * s)
        _put(t, 2, 2, 2, 1.0, 2.0 * am * s, 2.0 * am * s, -4.0 * am * s)
        _put(t, 3, 3, 3, 1.0, 2.0 * anb * s, 2.0 * anb * s, -4.0 * anb * s)
        _put(t, 4, 4, 4, 1.0, 2.0 * am * s, 2.0 * am * s, -4.0 * am * s)
        _put(t, 5, 5, 5, 1.0, 2.0 * anb * s, 2.0 * anb * s, -4.0 * anb * s)
        _put(t, 6, 6, 6, 1.0, 4.0 * am * s, -8.0 * am * s, 4.0 * am * s)
        _put(t, 7, 7, 7, 1.0, (b2 + 4.0 * an) * s, (4.0 * b2 - 8.0 * an) * s,
             (4.0 * b2 + 4.0 * an) * s)
        _put(t, 8, 0, 7, 2.0, x * s, -8.0 * x * s, 16.0 * x * s)
        return 0

    with gil:
        raise ValueError(f"unknown channel kind code {kind}")


cdef double _speed(Table* t, double p) noexcept nogil:
    cdef double acc = 0.0
    cdef double d
    cdef int k
    for k in range(t.n):
        d = t.c1[k] + 2.0 * t.c2[k] * p
        acc += t.w[k] * d * d
    return sqrt(acc)


cdef double _distance(Table* t, double p_tau) noexcept nogil:
    cdef double acc = 0.0
    cdef double one_minus = 1.0 - p_tau
    cdef double one_minus_sq = 1.0 - p_tau * p_tau
    cdef double d
    cdef int k
    for k in range(t.n):
        d = t.c1[k] * one_minus + t.c2[k] * one_minus_sq
        acc += t.w[k] * d * d
    return sqrt(acc)


cdef inline double _simpson(double fa, double fm, double fb, double width) noexcept nogil:
    return width / 6.0 * (fa + 4.0 * fm + fb)


cdef double _adaptive(Table* t, double a, double fa, double b, double fb,
                      double m, double fm, double whole, double tol,
                      int depth, int max_depth,
                      double* err, bint* converged) noexcept nogil:
    cdef double lm = 0.5 * (a + m)
    cdef double rm = 0.5 * (m + b)
    cdef double flm = _speed(t, lm)
    cdef double frm = _speed(t, rm)
    cdef double left = _simpson(fa, flm, fm, m - a)
    cdef double right = _simpson(fm, frm, fb, b - m)
    cdef double delta = left + right - whole
    cdef double lv, rv
    if fabs(delta) <= 15.0 * tol:
        err[0] += fabs(delta) / 15.0
        return left + right + delta / 15.0
    if depth >= max_depth:
        err[0] += fabs(delta) / 15.0
        converged[0] = False
        return left + right + delta / 15.0
    lv = _adaptive(t, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth + 1, max_depth,
                   err, converged)
    rv = _adaptive(t, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth + 1, max_depth,
                   err, converged)
    return lv + rv


cdef double _segment(Table* t, double lo, double hi, double tol, int max_depth,
                     double* err, bint* converged) noexcept nogil:
    cdef double flo = _speed(t, lo)
    cdef double fhi = _speed(t, hi)
    cdef double mid = 0.5 * (lo + hi)
    cdef double fmid = _speed(t, mid)
    cdef double whole = _simpson(flo, fmid, fhi, hi - lo)
    return _adaptive(t, lo, flo, hi, fhi, mid, fmid, whole, tol, 0, max_depth,
                     err, converged)


def element_table(int kind, double alpha, double m):
    """Quadratic-in-p coefficients of every nonzero evolved matrix element."""
    cdef Table t
    _fill_table(kind, alpha, m, &t)
    return [
        (t.ii[k], t.jj[k], t.w[k], t.c0[k], t.c1[k], t.c2[k]) for k in range(t.n)
    ]


def speed(int kind, double alpha, double m, double p):
    """Hilbert-Schmidt norm of d(rho)/dp at decoherence parameter p."""
    cdef Table t
    _fill_table(kind, alpha, m, &t)
    return _speed(&t, p)


def distance(int kind, double alpha, double m, double p_tau):
    """Hilbert-Schmidt norm of rho(p=1) - rho(p=p_tau)."""
    cdef Table t
    _fill_table(kind, alpha, m, &t)
    return _distance(&t, p_tau)


def path_length(int kind, double alpha, double m, double p_tau,
                double tol=1e-10, int max_depth=40):
    """Integral of the speed over [p_tau, 1]; splits at the p = 1/2 kink.

    Returns (value, error_estimate, converged).
    """
    cdef Table t
    cdef double total = 0.0
    cdef double err = 0.0
    cdef bint converged = True
    cdef double piece_tol
    _fill_table(kind, alpha, m, &t)
    if p_tau == 1.0:
        return 0.0, 0.0, True
    with nogil:
        if p_tau < 0.5:
            piece_tol = 0.5 * tol
            total += _segment(&t, p_tau, 0.5, piece_tol, max_depth, &err, &converged)
            total += _segment(&t, 0.5, 1.0, piece_tol, max_depth, &err, &converged)
        else:
            total = _segment(&t, p_tau, 1.0, tol, max_depth, &err, &converged)
    return total, err, converged
