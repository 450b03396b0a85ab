"""Exact geometric predicates over floating-point input.

Every finite float is a dyadic rational, so a polynomial predicate of the
input coordinates has an exact integer value once the operands are rescaled
by a suitable power of two.  The public predicates first try a floating
evaluation guarded by a forward error bound (the classic stage-A filter);
only signs the filter cannot certify fall through to the integer path.
"""

from __future__ import annotations

_EPS = 2.0 ** -53
_CCW_BOUND = (3.0 + 16.0 * _EPS) * _EPS
_ICC_BOUND = (10.0 + 96.0 * _EPS) * _EPS


def _sign(v) -> int:
    if v > 0:
        return 1
    if v < 0:
        return -1
    return 0


def scale_exponent(*xs) -> int:
    """Smallest k such that x * 2**k is an integer for every x."""
    k = 0
    for x in xs:
        d = x.as_integer_ratio()[1]
        b = d.bit_length() - 1
        if b > k:
            k = b
    return k


def scaled_int(x, k: int) -> int:
    """x * 2**k as an exact integer; k must cover x's dyadic exponent."""
    n, d = x.as_integer_ratio()
    return n << (k - (d.bit_length() - 1))


def orient2d_float(ax, ay, bx, by, cx, cy) -> float:
    """Raw floating orientation determinant; no exactness guarantee."""
    return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)


def _orient2d_exact(ax, ay, bx, by, cx, cy) -> int:
    # x and y may be rescaled independently: the determinant picks up a
    # positive factor 2**(kx+ky), which leaves the sign alone.
    kx = scale_exponent(ax, bx, cx)
    ky = scale_exponent(ay, by, cy)
    axi = scaled_int(ax, kx)
    bxi = scaled_int(bx, kx)
    cxi = scaled_int(cx, kx)
    ayi = scaled_int(ay, ky)
    byi = scaled_int(by, ky)
    cyi = scaled_int(cy, ky)
    return _sign((bxi - axi) * (cyi - ayi) - (byi - ayi) * (cxi - axi))


def orient2d(ax, ay, bx, by, cx, cy) -> int:
    """Sign of the orientation of the triple a, b, c.

    +1 when c lies strictly to the left of the directed line a->b, -1 when
    strictly to the right, 0 when collinear.  Exact for float/int input.
    """
    detleft = (ax - cx) * (by - cy)
    detright = (ay - cy) * (bx - cx)
    det = detleft - detright
    # float subtraction is sign-faithful, so differing (or zero) term signs
    # already decide the result
    if detleft > 0.0:
        if detright <= 0.0:
            return _sign(det)
        detsum = detleft + detright
    elif detleft < 0.0:
        if detright >= 0.0:
            return _sign(det)
        detsum = -detleft - detright
    else:
        if detright == 0.0:
            # both products rounded to zero; underflow could hide a sign
            return _orient2d_exact(ax, ay, bx, by, cx, cy)
        return _sign(-detright)
    # detsum below the normal range voids the error-bound analysis
    if detsum > 1e-280:
        errbound = _CCW_BOUND * detsum
        if det >= errbound or -det >= errbound:
            return _sign(det)
    return _orient2d_exact(ax, ay, bx, by, cx, cy)


def _incircle_exact(ax, ay, bx, by, cx, cy, dx, dy) -> int:
    # the lifted column mixes x**2 and y**2, so one common scale for all
    # eight coordinates
    k = scale_exponent(ax, ay, bx, by, cx, cy, dx, dy)
    dxi = scaled_int(dx, k)
    dyi = scaled_int(dy, k)
    adx = scaled_int(ax, k) - dxi
    ady = scaled_int(ay, k) - dyi
    bdx = scaled_int(bx, k) - dxi
    bdy = scaled_int(by, k) - dyi
    cdx = scaled_int(cx, k) - dxi
    cdy = scaled_int(cy, k) - dyi
    det = ((adx * adx + ady * ady) * (bdx * cdy - cdx * bdy)
           + (bdx * bdx + bdy * bdy) * (cdx * ady - adx * cdy)
           + (cdx * cdx + cdy * cdy) * (adx * bdy - bdx * ady))
    return _sign(det)


def incircle(ax, ay, bx, by, cx, cy, dx, dy) -> int:
    """Sign of the incircle determinant for counterclockwise a, b, c.

    +1 when d lies strictly inside the circumcircle of a, b, c, -1 when
    strictly outside, 0 when the four points are cocircular.
    """
    adx = ax - dx
    bdx = bx - dx
    cdx = cx - dx
    ady = ay - dy
    bdy = by - dy
    cdy = cy - dy

    bdxcdy = bdx * cdy
    cdxbdy = cdx * bdy
    alift = adx * adx + ady * ady
    cdxady = cdx * ady
    adxcdy = adx * cdy
    blift = bdx * bdx + bdy * bdy
    adxbdy = adx * bdy
    bdxady = bdx * ady
    clift = cdx * cdx + cdy * cdy

    det = (alift * (bdxcdy - cdxbdy)
           + blift * (cdxady - adxcdy)
           + clift * (adxbdy - bdxady))

    permanent = ((abs(bdxcdy) + abs(cdxbdy)) * alift
                 + (abs(cdxady) + abs(adxcdy)) * blift
                 + (abs(adxbdy) + abs(bdxady)) * clift)
    if permanent > 1e-250:
        errbound = _ICC_BOUND * permanent
        if det > errbound or -det > errbound:
            return _sign(det)
    return _incircle_exact(ax, ay, bx, by, cx, cy, dx, dy)
