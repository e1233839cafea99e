"""Signed-permutation groups and the small-n tower checks.

The integral orthogonal group in rank n is the group of signed permutation
matrices.  This module builds its index-2 subgroups and the evenly-signed
even-permutation subgroup H, decides perfectness by commutator closure,
solves the crossed-homomorphism system over F_2, and checks the
commutator form of the quadratic refinement against the Clifford words.
"""

from __future__ import annotations

import itertools

from .cliffcode import CliffordWord, SignedMatrix

MAX_TOWER_N = 6


def signed_perm(perm, signs):
    """Element with row r carrying signs[r] in column perm[r]."""
    return SignedMatrix(tuple(perm), tuple(signs))


def perm_parity(perm):
    inv = 0
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                inv += 1
    return inv % 2


def det(m):
    d = 1
    for s in m.signs:
        d *= s
    return d * (-1 if perm_parity(m.perm) else 1)


def full_group(n):
    """All signed permutation matrices; order 2^n n!."""
    if n > MAX_TOWER_N:
        raise ValueError("full group too large beyond n = %d" % MAX_TOWER_N)
    out = []
    for perm in itertools.permutations(range(n)):
        for signs in itertools.product((1, -1), repeat=n):
            out.append(signed_perm(perm, signs))
    return out


def subgroup_H(n):
    """Evenly signed even permutations; order n!/2 * 2^(n-1)."""
    if n < 3 or n > MAX_TOWER_N:
        raise ValueError("supported range is 3 <= n <= %d" % MAX_TOWER_N)
    out = []
    for perm in itertools.permutations(range(n)):
        if perm_parity(perm):
            continue
        for signs in itertools.product((1, -1), repeat=n):
            if signs.count(-1) % 2 == 0:
                out.append(signed_perm(perm, signs))
    return out


def _closure(generators, limit):
    """Subgroup generated by the given elements, BFS in deterministic
    order."""
    ident = SignedMatrix.identity(generators[0].dim) if generators else None
    if ident is None:
        return []
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for h in generators:
                prod = g * h
                if prod not in seen:
                    seen.add(prod)
                    nxt.append(prod)
                    if len(seen) > limit:
                        raise ValueError("closure exceeded size guard")
        frontier = nxt
    return sorted(seen, key=lambda m: (m.perm, m.signs))


def _generating_subset(elements):
    """Small generating list for the subgroup formed by the elements."""
    gens = []
    known = {SignedMatrix.identity(elements[0].dim)}
    for g in elements:
        if g not in known:
            gens.append(g)
            known = set(_closure(gens, len(elements)))
    return gens


def is_perfect(elements):
    """True when the commutator subgroup is the whole group."""
    if not elements:
        return True
    if len(elements) > 20000:
        raise ValueError("group too large for the closure check")
    group = set(elements)
    gens = _generating_subset(list(elements))
    if not gens:
        return len(group) == 1
    comm = []
    for a in gens:
        for b in gens:
            c = a * b * a.transpose() * b.transpose()
            if not c.is_identity():
                comm.append(c)
    if not comm:
        return len(group) == 1
    while True:
        derived = set(_closure(comm, len(group)))
        extra = []
        for g in gens:
            gt = g.transpose()
            for d in derived:
                c = gt * d * g
                if c not in derived:
                    extra.append(c)
        if not extra:
            return derived == group
        comm = sorted(derived | set(extra),
                      key=lambda m: (m.perm, m.signs))


# ---------------------------------------------------------------------------
# Crossed homomorphisms from the alternating group
# ---------------------------------------------------------------------------

def alternating_generators(n):
    """A 3-cycle and a long even cycle generating the alternating group."""
    a = tuple([1, 2, 0] + list(range(3, n)))
    if n % 2:
        b = tuple(list(range(1, n)) + [0])
    else:
        b = tuple([0] + list(range(2, n)) + [1])
    assert perm_parity(a) == 0 and perm_parity(b) == 0
    return a, b


def _quotient_action(perm):
    """Action of a permutation on F_2^n / <all-ones>, in the basis given
    by the first n-1 coordinate classes.  Rows are bitmasks."""
    n = len(perm)
    cols = []
    for i in range(n - 1):
        j = perm[i]
        if j < n - 1:
            cols.append(1 << j)
        else:
            cols.append((1 << (n - 1)) - 1)
    rows = []
    for r in range(n - 1):
        mask = 0
        for c in range(n - 1):
            if cols[c] >> r & 1:
                mask |= 1 << c
        rows.append(mask)
    return tuple(rows)


def _mat_vec_bits(rows, vec):
    out = 0
    for r, row in enumerate(rows):
        if bin(row & vec).count("1") % 2:
            out |= 1 << r
    return out


def _rank_f2(rows):
    rows = [r for r in rows if r]
    rank = 0
    for bit in range(max(rows).bit_length() if rows else 0):
        pivot = None
        for i in range(rank, len(rows)):
            if rows[i] >> bit & 1:
                pivot = i
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i] >> bit & 1:
                rows[i] ^= rows[rank]
        rank += 1
    return rank


def _compose(p, q):
    return tuple(p[q[i]] for i in range(len(q)))


def crossed_hom_space(n):
    """Dimensions of the crossed-homomorphism space, its principal
    subspace, and the quotient, for maps from the alternating group to
    F_2^n / <all-ones>."""
    if n < 3 or n > MAX_TOWER_N:
        raise ValueError("supported range is 3 <= n <= %d" % MAX_TOWER_N)
    d = n - 1
    a, b = alternating_generators(n)
    gens = (a, b)
    nunk = 2 * d                    # coordinates of f(a) and f(b)

    # expression for f(g): d rows, each a bitmask over the unknowns
    ident = tuple(range(n))
    exprs = {ident: (0,) * d}
    actions = {ident: _quotient_action(ident)}
    gen_expr = []
    for k in range(2):
        gen_expr.append(tuple(1 << (k * d + r) for r in range(d)))
    equations = []
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            fg = exprs[g]
            act = actions[g]
            for k, x in enumerate(gens):
                h = _compose(g, x)
                # f(gx) = f(g) + g.f(x); act rows give the mixing
                fx = gen_expr[k]
                mixed = []
                for r in range(d):
                    acc = fg[r]
                    row = act[r]
                    for c in range(d):
                        if row >> c & 1:
                            acc ^= fx[c]
                    mixed.append(acc)
                if h in exprs:
                    for r in range(d):
                        eq = exprs[h][r] ^ mixed[r]
                        if eq:
                            equations.append(eq)
                else:
                    exprs[h] = tuple(mixed)
                    actions[h] = _quotient_action(h)
                    nxt.append(h)
        frontier = nxt
    group_order = len(exprs)
    dim_crossed = nunk - _rank_f2(equations)

    # principal maps p -> (g -> p + g.p); kernel = invariant classes
    stacked = []
    for x in gens:
        act = _quotient_action(x)
        for r in range(d):
            stacked.append(act[r] ^ (1 << r))
    dim_invariants = d - _rank_f2(list(stacked))
    dim_principal = d - dim_invariants
    return {
        "n": n,
        "group_order": group_order,
        "dim_crossed": dim_crossed,
        "dim_principal": dim_principal,
        "dim_invariants": dim_invariants,
        "h1_dim": dim_crossed - dim_principal,
    }


def crossed_hom_solutions(n):
    """Basis of the solution space as explicit maps (dict per basis
    vector), for independent validation of the linear-system route."""
    d = n - 1
    a, b = alternating_generators(n)
    space = []
    for bits in range(1 << (2 * d)):
        fa = bits & ((1 << d) - 1)
        fb = bits >> d
        f = {tuple(range(n)): 0, a: fa}
        ok = True
        frontier = [tuple(range(n)), a]
        if b in f:
            ok = f[b] == fb
        else:
            f[b] = fb
            frontier.append(b)
        while frontier and ok:
            nxt = []
            for g in frontier:
                act = _quotient_action(g)
                for x, fx in ((a, fa), (b, fb)):
                    h = _compose(g, x)
                    val = f[g] ^ _mat_vec_bits(act, fx)
                    if h in f:
                        if f[h] != val:
                            ok = False
                            break
                    else:
                        f[h] = val
                        nxt.append(h)
                if not ok:
                    break
            frontier = nxt
        if ok:
            space.append(f)
    return space


# ---------------------------------------------------------------------------
# The commutator form at n = 8
# ---------------------------------------------------------------------------

def beta_form_check(n=8):
    """Commutator signs of lifted even vectors against the alternating
    form value sum_{i != j} h_i k_j."""
    evens = [bits for bits in range(1 << n)
             if bin(bits).count("1") % 2 == 0]
    for hb in evens:
        wh = CliffordWord(n, 1, hb)
        whi = wh.inverse()
        for kb in evens:
            wk = CliffordWord(n, 1, kb)
            comm = wh * wk * whi * wk.inverse()
            if comm.bits != 0:
                return False
            h_wt = bin(hb).count("1")
            k_wt = bin(kb).count("1")
            meet = bin(hb & kb).count("1")
            form = (h_wt * k_wt - meet) % 2
            if comm.sign != (1 if form == 0 else -1):
                return False
    return True


def pair_form_sweep(n=8):
    """The weight-2 exhaustive comparison: all pairs of length-2 words."""
    pairs = [frozenset(p) for p in itertools.combinations(range(n), 2)]
    results = []
    for s in pairs:
        ws = CliffordWord.from_support(n, sorted(s))
        for t in pairs:
            wt = CliffordWord.from_support(n, sorted(t))
            commutes = ws * wt == wt * ws
            results.append(commutes == (len(s & t) % 2 == 0))
    return len(pairs), all(results)


def index_two_intersection(n):
    """The determinant, permutation-parity, and sign-parity kernels of
    the full signed-permutation group, and their intersection."""
    group = full_group(n)
    det_ker = {m for m in group if det(m) == 1}
    perm_ker = {m for m in group if perm_parity(m.perm) == 0}
    sign_ker = {m for m in group if m.signs.count(-1) % 2 == 0}
    inter = det_ker & perm_ker & sign_ker
    return {
        "order": len(group),
        "det_kernel": len(det_ker),
        "perm_kernel": len(perm_ker),
        "sign_kernel": len(sign_ker),
        "intersection": len(inter),
        "intersection_is_H": inter == set(subgroup_H(n)),
    }


def tower_report(n):
    """Order, perfectness, and first-cohomology dimension for one n."""
    group = subgroup_H(n)
    hom = crossed_hom_space(n)
    return {
        "n": n,
        "order": len(group),
        "perfect": is_perfect(group),
        "h1_dim": hom["h1_dim"],
        "dim_crossed": hom["dim_crossed"],
        "dim_principal": hom["dim_principal"],
    }
