"""Shared constructors for scaled encode/frame instances used across tests."""

import math
import random

from orientcount import (
    EncodeInput,
    Frame,
    Params,
    mask_of,
    sample_extension,
    sample_gnp,
    sample_orientation,
    validate_frame,
)


def scaled_params(ell, p, n, alpha_target):
    """Params whose alpha equals alpha_target exactly at ambient size n."""
    return Params(ell=ell, p=p, n=n, alpha_scale=alpha_target * p / math.log(n))


def make_encode_instance(
    ell,
    seed,
    n_host=20,
    alpha_target=4.0,
    p=0.75,
    r=None,
    empty_cross=False,
):
    """Deterministic scaled encode instance: (params, input).

    Host on n_host vertices, hubs A on ceil(alpha/2) fresh vertices, frame
    sizes drawn admissibly at alpha = alpha_target.  empty_cross samples the
    new edges with probability zero so the input has no A-incident edges.
    """
    rng = random.Random(seed)
    probe = scaled_params(ell, p, n_host + 1, alpha_target)
    a_size = probe.a_size
    n_total = n_host + a_size
    params = scaled_params(ell, p, n_total, alpha_target)
    assert params.a_size == a_size

    host_verts = list(range(n_host))
    hubs = list(range(n_host, n_total))
    if r is None:
        r = rng.randint(2, ell) if ell > 2 else 2
    bmin, bmax = params.b_min(r), params.b_max
    ap = params.a_prime_size
    while True:
        bsize = rng.randint(bmin, bmax)
        xsize = rng.randint(0, params.x_max(r))
        if n_host - bsize - xsize - ap >= 0:
            break
    shuffled = host_verts[:]
    rng.shuffle(shuffled)
    B = mask_of(shuffled[:bsize])
    X = mask_of(shuffled[bsize : bsize + xsize])
    A = mask_of(hubs)

    h = sample_gnp(n_total, p, seed).induced(mask_of(host_verts))
    frame = Frame(A, h, B, X, r)
    assert validate_frame(frame, params)
    h_orient = sample_orientation(h, seed + 1)
    cross_p = 0.0 if empty_cross else p
    g = sample_extension(A, h, cross_p, seed + 2)
    g_orient = sample_orientation(g, seed + 3)
    # make the extension consistent with the host orientation
    g_rows = [g_orient.out_mask(u) for u in range(g.n)]
    hv = h.verts
    for u in range(g.n):
        if (hv >> u) & 1:
            g_rows[u] = (g_rows[u] & ~hv) | h_orient.out_mask(u)
    from orientcount.graphs import Orientation

    g_orient = Orientation._from_rows(g, g_rows)
    assert g_orient.restricted_to(hv) == h_orient
    return params, EncodeInput(frame, h_orient, g, g_orient)
