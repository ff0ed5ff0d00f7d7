"""Pure-Python implementations of the two hot kernels.

``lane_emden._ckernels`` is the compiled (Cython) twin of this module; the
active implementation is picked in ``lane_emden._backend``.  Both must
return identical results: the series kernel works on arbitrary-precision
integers, and the stepping kernel performs the same double-precision
operations in the same order.

The series kernel keeps each coefficient polynomial in denominator-cleared
form, ``a_k(n) = A_k(n) / d_k`` with ``A_k`` an integer coefficient list and
``d_k`` a positive integer coprime to the content of ``A_k``.  That avoids
per-term fraction normalization inside the recurrence

    a_k = -c_{k-2} / (k^2 + k)
    c_k = (1/k) * sum_{l=1..k} (l*(n + 1) - k) * a_l * c_{k-l}

where the sum only needs the even ``l`` because odd-index coefficients
vanish.
"""

from __future__ import annotations

from math import gcd, lcm


def _content(values) -> int:
    g = 0
    for v in values:
        g = gcd(g, v)
    return g


def _reduce(nums, den):
    g = gcd(_content(nums), den)
    if g > 1:
        nums = [v // g for v in nums]
        den //= g
    return nums, den


def lee_series_tables(m: int):
    """Coefficient tables ``a_k(n)`` and ``c_k(n)`` through index ``m``.

    Returns ``(a_num, a_den, c_num, c_den)`` where ``a_num[k]`` lists the
    integer coefficients of ``n**j`` for ``a_k`` and ``a_den[k]`` is the
    positive common denominator (and likewise for ``c``).  Odd indices are
    stored as explicit zeros.
    """
    a_num = [[1], [0]]
    a_den = [1, 1]
    c_num = [[1], [0]]
    c_den = [1, 1]
    for k in range(2, m + 1):
        if k % 2:
            a_num.append([0])
            a_den.append(1)
            c_num.append([0])
            c_den.append(1)
            continue

        nums = [-v for v in c_num[k - 2]]
        nums, den = _reduce(nums, c_den[k - 2] * (k * k + k))
        a_num.append(nums)
        a_den.append(den)

        terms = []
        common = 1
        for l in range(2, k + 1, 2):
            al = a_num[l]
            cl = c_num[k - l]
            # (l*n + (l - k)) * a_l, then * c_{k-l}
            bracket = [0] * (len(al) + 1)
            c0 = l - k
            for j, v in enumerate(al):
                bracket[j] += c0 * v
                bracket[j + 1] += l * v
            prod = [0] * (len(bracket) + len(cl) - 1)
            for i, bi in enumerate(bracket):
                if bi:
                    for j, cj in enumerate(cl):
                        if cj:
                            prod[i + j] += bi * cj
            den_l = a_den[l] * c_den[k - l]
            terms.append((prod, den_l))
            common = lcm(common, den_l)

        total = [0] * max(len(p) for p, _ in terms)
        for prod, den_l in terms:
            scale = common // den_l
            for j, v in enumerate(prod):
                if v:
                    total[j] += v * scale
        while len(total) > 1 and total[-1] == 0:
            total.pop()
        total, den = _reduce(total, common * k)
        c_num.append(total)
        c_den.append(den)

    end = m + 1
    return a_num[:end], a_den[:end], c_num[:end], c_den[:end]


def midpoint_steps(n: float, dx: float, xmax: float, xs, Fs, Hs):
    """Advance the midpoint grid in place from the last stored sample.

    Appends to ``xs``/``Fs``/``Hs`` until the solution would cross zero or
    the next grid point would pass ``xmax``.  Returns ``(crossed, x_stop,
    f_stop)``: when ``crossed`` is true, ``(x_stop, f_stop)`` is the
    rejected nonpositive sample (never appended) for zero interpolation;
    otherwise both are ``0.0`` and meaningless.

    One step from the sample ``(x, F, H)``:

        F_half = F + dx/2 * H
        H_half = H + dx/2 * (-F**n - (2/x) * H)
        F_next = F + dx * H_half
        H_next = H + dx * (-F_half**n - (2/(x + dx/2)) * H_half)

    Note the full-step slope uses the half-step predictor ``F_half`` inside
    the power term but the stored ``F`` when building the predictors; this
    asymmetric variant is kept as-is rather than normalized to a textbook
    two-stage scheme.  For non-integer ``n`` a nonpositive ``F_half`` would
    make the power undefined, so the loop terminates just before that.
    """
    n = float(n)
    dx = float(dx)
    xmax = float(xmax)
    integer_n = n == int(n)
    x = xs[-1]
    F = Fs[-1]
    H = Hs[-1]
    while True:
        if x + dx > xmax:
            return False, 0.0, 0.0
        F_half = F + 0.5 * dx * H
        H_half = H + 0.5 * dx * (-(F**n) - (2.0 / x) * H)
        F_next = F + dx * H_half
        x_half = x + 0.5 * dx
        if not integer_n and F_half <= 0.0:
            if F_next < 0.0:
                return True, x + dx, F_next
            return True, x_half, F_half
        H_next = H + dx * (-(F_half**n) - (2.0 / x_half) * H_half)
        if F_next < 0.0:
            return True, x + dx, F_next
        x = x + dx
        F = F_next
        H = H_next
        xs.append(x)
        Fs.append(F)
        Hs.append(H)
