"""Multipartition and tableau combinatorics.

Conventions used package-wide:

  * A permutation of {1..n} is a tuple ``w`` of images, ``w[i-1] = w(i)``.
    Products compose left to right: ``pmul(v, w)(i) = w(v(i))``, so a reduced
    word ``[i1..il]`` means "apply s_{i1} first".
  * Multicompositions are r-tuples of component rows, each component padded
    with zeros to its full length bound ``m_i``; two paddings of the same
    partition with different bounds are different objects on purpose.
  * Tableau cells are addressed (component, row, column), all 0-based
    internally; entries of semistandard tableaux are the 1-based pairs
    (row index, component index).
  * Enumerations are deterministic: shapes in decreasing lexicographic order
    of their concatenated entries, standard tableaux sorted by the image
    tuple of their permutation (so the row-reading filling comes first),
    semistandard fillings in increasing entry order cell by cell.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache


class SizeMismatch(ValueError):
    pass


class BlockMismatch(ValueError):
    pass


class BoundsTooSmall(ValueError):
    pass


# ---------------------------------------------------------------------------
# permutations (image tuples, 1-based values)


def perm_identity(n):
    return tuple(range(1, n + 1))


def pmul(v, w):
    """Apply v, then w."""
    return tuple(w[x - 1] for x in v)


def pinv(w):
    out = [0] * len(w)
    for i, x in enumerate(w):
        out[x - 1] = i + 1
    return tuple(out)


def plen(w):
    n = len(w)
    return sum(1 for a in range(n) for b in range(a + 1, n) if w[a] > w[b])


def transposition(n, i):
    """The adjacent transposition s_i = (i, i+1)."""
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def reduced_word(w):
    """A reduced word [i1..il] with w = s_{i1} * ... * s_{il}."""
    w = list(w)
    n = len(w)
    word = []
    # repeatedly strip a generator from the right: w*s_i is shorter exactly
    # when the value i sits to the right of i+1 in the image tuple
    changed = True
    while changed:
        changed = False
        for i in range(1, n):
            if w.index(i) > w.index(i + 1):
                a, b = w.index(i), w.index(i + 1)
                w[a], w[b] = w[b], w[a]
                word.append(i)
                changed = True
                break
    word.reverse()
    return word


def all_perms(n):
    """All of S_n sorted by image tuple, with lengths."""
    perms = sorted(itertools.permutations(range(1, n + 1)))
    return perms, [plen(w) for w in perms]


# ---------------------------------------------------------------------------
# multicompositions


@dataclass(frozen=True)
class MultiComposition:
    """r components, each padded to its length bound with zeros."""

    comps: tuple

    def __post_init__(self):
        object.__setattr__(self, "comps", tuple(tuple(c) for c in self.comps))

    @property
    def r(self):
        return len(self.comps)

    @property
    def bounds(self):
        return tuple(len(c) for c in self.comps)

    @property
    def n(self):
        return sum(sum(c) for c in self.comps)

    def is_partition(self):
        return all(
            all(c[i] >= c[i + 1] for i in range(len(c) - 1)) for c in self.comps
        )

    def cells(self):
        """Diagram cells (component, row, col), 0-based, reading order."""
        out = []
        for k, c in enumerate(self.comps):
            for i, rowlen in enumerate(c):
                for j in range(rowlen):
                    out.append((k, i, j))
        return out

    def pretty(self):
        return ";".join(
            ",".join(str(x) for x in _strip(c)) or "-" for c in self.comps
        )

    def as_lists(self):
        return [list(_strip(c)) for c in self.comps]


def _strip(c):
    out = list(c)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def compositions_of(total, length):
    """All vectors in Z_{>=0}^length summing to total, lex decreasing."""
    if length == 0:
        return [()] if total == 0 else []
    out = []
    for first in range(total, -1, -1):
        for rest in compositions_of(total - first, length - 1):
            out.append((first,) + rest)
    return out


def generate_lambda(n, r, m):
    """All r-compositions of n with component length bounds m.

    Returns (Lam, LamPlus); LamPlus is the sublist of r-partitions, both in
    decreasing lexicographic order of the concatenated entries.
    """
    if n < 1 or r < 1 or any(x < 1 for x in m) or len(m) != r:
        raise ValueError("need n >= 1, r >= 1, positive bounds of length r")
    per_size = [
        {s: compositions_of(s, m[i]) for s in range(n + 1)} for i in range(r)
    ]
    lam = []
    for sizes in compositions_of(n, r):
        for combo in itertools.product(
            *(per_size[i][sizes[i]] for i in range(r))
        ):
            lam.append(MultiComposition(combo))
    lam.sort(key=lambda x: x.comps, reverse=True)
    lam_plus = [x for x in lam if x.is_partition()]
    return lam, lam_plus


def _partial_sums(lam):
    out = []
    acc = 0
    for c in lam.comps:
        row = 0
        for x in c:
            row += x
            out.append(acc + row)
        acc += row
    return out


def dominates(lam, mu):
    """lam dominance-greater-or-equal mu (double partial sums)."""
    if lam.n != mu.n or lam.r != mu.r:
        raise SizeMismatch("dominance needs equal size and component count")
    return all(a >= b for a, b in zip(_partial_sums(lam), _partial_sums(mu)))


def dominance(lam, mu):
    """One of 'gt', 'eq', 'lt', 'incomparable'."""
    ge = dominates(lam, mu)
    le = dominates(mu, lam)
    if ge and le:
        return "eq"
    if ge:
        return "gt"
    if le:
        return "lt"
    return "incomparable"


# ---------------------------------------------------------------------------
# parabolic shapes


@dataclass(frozen=True)
class ParabolicShape:
    parts: tuple

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if any(x < 1 for x in self.parts):
            raise ValueError("parabolic shape parts must be positive")

    @property
    def g(self):
        return len(self.parts)

    @property
    def r(self):
        return sum(self.parts)

    @property
    def offsets(self):
        """p_k = r_1 + ... + r_{k-1}, one per block (p_1 = 0)."""
        out = []
        acc = 0
        for x in self.parts:
            out.append(acc)
            acc += x
        return tuple(out)

    def block_of_component(self, c):
        """Block index k (1-based) of the 1-based component index c."""
        for k, off in enumerate(self.offsets):
            if off < c <= off + self.parts[k]:
                return k + 1
        raise BlockMismatch(f"component {c} out of range")

    def refines(self, other):
        """True when this shape subdivides the blocks of ``other``."""
        if self.r != other.r:
            return False
        mine = set(itertools.accumulate(self.parts))
        return set(itertools.accumulate(other.parts)) <= mine


def alpha_and_a(mu, p):
    """Block size vector and its partial sums, per parabolic shape."""
    if p.r != mu.r:
        raise SizeMismatch("shape does not match component count")
    alpha = []
    for k in range(p.g):
        off = p.offsets[k]
        alpha.append(sum(sum(mu.comps[off + i]) for i in range(p.parts[k])))
    a = [0]
    for x in alpha[:-1]:
        a.append(a[-1] + x)
    return tuple(alpha), tuple(a)


def comp_block(mu, p, k):
    """The k-th (1-based) block of components, as its own multicomposition."""
    off = p.offsets[k - 1]
    return MultiComposition(mu.comps[off : off + p.parts[k - 1]])


# ---------------------------------------------------------------------------
# standard tableaux


@dataclass(frozen=True)
class StdTableau:
    shape: MultiComposition
    rows: tuple  # rows[k][i][j] = letter

    def __post_init__(self):
        object.__setattr__(
            self, "rows", tuple(tuple(tuple(r) for r in c) for c in self.rows)
        )

    def entry(self, k, i, j):
        return self.rows[k][i][j]

    def letter_positions(self):
        """letter -> (component, row, col)."""
        out = {}
        for k, comp in enumerate(self.rows):
            for i, row in enumerate(comp):
                for j, x in enumerate(row):
                    out[x] = (k, i, j)
        return out

    def d_perm(self):
        """The permutation carrying the row-reading filling to this one."""
        base = t_initial(self.shape)
        pos = base.letter_positions()
        n = self.shape.n
        images = [0] * n
        for letter, (k, i, j) in pos.items():
            images[letter - 1] = self.entry(k, i, j)
        return tuple(images)

    def act(self, w):
        """Right action: replace each letter x by w(x)."""
        return StdTableau(
            self.shape,
            tuple(
                tuple(tuple(w[x - 1] for x in row) for row in comp)
                for comp in self.rows
            ),
        )

    def pretty(self):
        return " | ".join(
            " ".join("".join(f"{x}." for x in row) for row in comp) or "-"
            for comp in self.rows
        )


def t_initial(shape):
    """Fill 1..n along rows, component by component (row-reading filling)."""
    rows = []
    x = 1
    for c in shape.comps:
        comp = []
        for rowlen in c:
            comp.append(tuple(range(x, x + rowlen)))
            x += rowlen
        rows.append(tuple(comp))
    return StdTableau(shape, tuple(rows))


@lru_cache(maxsize=None)
def std_tableaux(shape):
    """All standard tableaux of a multipartition shape.

    The row-reading filling comes first; the rest follow in lexicographic
    order of their permutation's image tuple.
    """
    if not shape.is_partition():
        raise ValueError("standard tableaux need a partition shape")
    n = shape.n
    heights = [len(_strip(c)) for c in shape.comps]
    fill = [
        [[0] * rowlen for rowlen in c] for c in (shape.comps)
    ]
    rowfill = [[0] * len(c) for c in shape.comps]
    out = []

    def place(letter):
        if letter > n:
            out.append(
                StdTableau(
                    shape,
                    tuple(
                        tuple(tuple(row) for row in comp) for comp in fill
                    ),
                )
            )
            return
        for k in range(len(fill)):
            for i in range(heights[k]):
                j = rowfill[k][i]
                if j >= shape.comps[k][i]:
                    continue
                if i > 0 and rowfill[k][i - 1] <= j:
                    continue  # column would not increase strictly
                fill[k][i][j] = letter
                rowfill[k][i] += 1
                place(letter + 1)
                rowfill[k][i] -= 1
        return

    place(1)
    out.sort(key=lambda t: t.d_perm())
    return out


# ---------------------------------------------------------------------------
# semistandard tableaux


@dataclass(frozen=True)
class SemiTableau:
    """Filling by pairs (row index, component index), both 1-based."""

    shape: MultiComposition
    rows: tuple  # rows[k][i][j] = (i', k')

    def __post_init__(self):
        object.__setattr__(
            self,
            "rows",
            tuple(
                tuple(tuple(tuple(e) for e in r) for r in c) for c in self.rows
            ),
        )

    def entry(self, k, i, j):
        return self.rows[k][i][j]

    def tableau_type(self, bounds):
        counts = {}
        for comp in self.rows:
            for row in comp:
                for e in row:
                    counts[e] = counts.get(e, 0) + 1
        comps = []
        for k, mk in enumerate(bounds):
            comps.append(
                tuple(counts.get((i + 1, k + 1), 0) for i in range(mk))
            )
        return MultiComposition(comps)

    def is_semistandard(self):
        for k, comp in enumerate(self.rows):
            for i, row in enumerate(comp):
                for j, e in enumerate(row):
                    if _pair_key(e) < (k + 1, 0):
                        return False  # component condition k' >= k
                    if j > 0 and _pair_key(row[j - 1]) > _pair_key(e):
                        return False
                    if i > 0 and j < len(comp[i - 1]):
                        if not _pair_key(comp[i - 1][j]) < _pair_key(e):
                            return False
        return True

    def pretty(self):
        return " | ".join(
            " ".join(
                "".join(f"({a},{b})" for (a, b) in row) for row in comp
            )
            or "-"
            for comp in self.rows
        )


def _pair_key(e):
    i, k = e
    return (k, i)


@lru_cache(maxsize=None)
def semistandard_tableaux(shape, mu):
    """All semistandard tableaux of the given shape and type."""
    if shape.n != mu.n:
        raise SizeMismatch("shape and type must have equal size")
    counts = {}
    for k, c in enumerate(mu.comps):
        for i, x in enumerate(c):
            if x:
                counts[(i + 1, k + 1)] = x
    entries = sorted(counts, key=_pair_key)
    cells = shape.cells()
    fill = {}
    out = []

    def place(idx):
        if idx == len(cells):
            out.append(_assemble(shape, fill))
            return
        k, i, j = cells[idx]
        for e in entries:
            if counts[e] == 0:
                continue
            if _pair_key(e) < (k + 1, 0):
                continue
            if j > 0 and _pair_key(fill[(k, i, j - 1)]) > _pair_key(e):
                continue
            if i > 0 and (k, i - 1, j) in fill:
                if not _pair_key(fill[(k, i - 1, j)]) < _pair_key(e):
                    continue
            counts[e] -= 1
            fill[(k, i, j)] = e
            place(idx + 1)
            del fill[(k, i, j)]
            counts[e] += 1

    place(0)
    return out


def _assemble(shape, fill):
    rows = []
    for k, c in enumerate(shape.comps):
        comp = []
        for i, rowlen in enumerate(c):
            comp.append(tuple(fill[(k, i, j)] for j in range(rowlen)))
        rows.append(tuple(comp))
    return SemiTableau(shape, tuple(rows))


def superstandard(shape):
    """The unique semistandard tableau of shape and type both equal."""
    base = t_initial(shape)
    return mu_of_std(shape, base)


def mu_of_std(mu, t):
    """Replace each letter of t by its (row, component) position in the
    row-reading filling of mu.  The result need not be semistandard."""
    if mu.n != t.shape.n:
        raise SizeMismatch("type size must match tableau size")
    where = {}
    letter = 1
    for k, c in enumerate(mu.comps):
        for i, rowlen in enumerate(c):
            for _ in range(rowlen):
                where[letter] = (i + 1, k + 1)
                letter += 1
    rows = tuple(
        tuple(tuple(where[x] for x in row) for row in comp)
        for comp in t.rows
    )
    return SemiTableau(t.shape, rows)


@lru_cache(maxsize=None)
def T0(shape, mu):
    """Semistandard tableaux of given shape and type (cached alias)."""
    return semistandard_tableaux(shape, mu)


def filtered_T0p(shape, mu, p):
    """Semistandard tableaux retained by the parabolic filter."""
    if alpha_and_a(shape, p)[1] != alpha_and_a(mu, p)[1]:
        return []
    return list(T0(shape, mu))


# ---------------------------------------------------------------------------
# the two-label index of the standardly based structure


def sigma_index(lam_list, lam_plus, p):
    """Index pairs (shape, 0|1) with their left/right tableau families.

    Returns (sigma, I, J): sigma is the list of retained pairs; I and J map
    each pair to a list of (type, tableau) entries.
    """
    sigma = []
    I = {}
    J = {}
    a_of = {mu: alpha_and_a(mu, p)[1] for mu in lam_list}
    for lam in lam_plus:
        a_lam = a_of[lam]
        t0p = []
        lower = []
        full = []
        for mu in lam_list:
            tabs = T0(lam, mu)
            if not tabs:
                continue
            full.extend((mu, T) for T in tabs)
            if a_of[mu] == a_lam:
                t0p.extend((mu, T) for T in tabs)
            elif all(x >= y for x, y in zip(a_lam, a_of[mu])):
                lower.extend((mu, T) for T in tabs)
        eps0 = (lam, 0)
        sigma.append(eps0)
        I[eps0] = list(t0p)
        J[eps0] = list(t0p)
        if lower:
            eps1 = (lam, 1)
            sigma.append(eps1)
            I[eps1] = list(lower)
            J[eps1] = list(full)
    return sigma, I, J


def sigma_greater(e1, e2):
    """Strict order: shapes by strict dominance, then 1 above 0."""
    lam1, v1 = e1
    lam2, v2 = e2
    if lam1 != lam2:
        return dominance(lam1, lam2) == "gt"
    return v1 > v2


# ---------------------------------------------------------------------------
# the Omega combinatorics


@dataclass(frozen=True)
class OmegaElement:
    comp: MultiComposition  # the 0/1 multicomposition
    b: tuple  # b[i-1] = block index of letter i, 1-based
    d: tuple  # permutation (image tuple)

    @property
    def blocks(self):
        g = max(self.b) if self.b else 1
        return tuple(
            tuple(i + 1 for i, x in enumerate(self.b) if x == k + 1)
            for k in range(g)
        )


def omega_set(n, p, m):
    """All block assignments of {1..n}, encoded as 0/1 multicompositions."""
    r, g = p.r, p.g
    if len(m) != r:
        raise SizeMismatch("bounds must have one entry per component")
    if any(x < n for x in m):
        raise BoundsTooSmall("omega encoding needs every bound >= n")
    out = []
    for b in itertools.product(range(1, g + 1), repeat=n):
        comps = []
        for c in range(1, r + 1):
            row = [0] * m[c - 1]
            for k in range(1, g + 1):
                if c == p.offsets[k - 1] + p.parts[k - 1]:
                    for i in range(1, n + 1):
                        if b[i - 1] == k:
                            row[i - 1] = 1
            comps.append(tuple(row))
        blocks = [
            [i for i in range(1, n + 1) if b[i - 1] == k]
            for k in range(1, g + 1)
        ]
        images = [0] * n
        pos = 0
        for k in range(g):
            for x in blocks[k]:
                images[pos] = x
                pos += 1
        out.append(
            OmegaElement(MultiComposition(comps), tuple(b), tuple(images))
        )
    return out


def omega_of_std(t, p):
    """Block assignment read off a standard tableau (letters per block)."""
    b = [0] * t.shape.n
    for k, comp in enumerate(t.rows):
        blk = p.block_of_component(k + 1)
        for row in comp:
            for x in row:
                b[x - 1] = blk
    return tuple(b)


def omega_typed_tableau(t, p):
    """The semistandard tableau pairing each letter of t with the last
    component index of its block."""
    rows = []
    for k, comp in enumerate(t.rows):
        blk = p.block_of_component(k + 1)
        second = p.offsets[blk - 1] + p.parts[blk - 1]
        rows.append(
            tuple(tuple((x, second) for x in row) for row in comp)
        )
    return SemiTableau(t.shape, tuple(rows))


def omega_bijection(shape, p, omegas):
    """The correspondence between standard tableaux and omega-typed
    semistandard tableaux.

    Returns (forward, fibers): forward maps t to (omega, T); fibers maps each
    omega to its list of t, in enumeration order.
    """
    by_b = {w.b: w for w in omegas}
    forward = {}
    fibers = {w: [] for w in omegas}
    for t in std_tableaux(shape):
        w = by_b[omega_of_std(t, p)]
        T = omega_typed_tableau(t, p)
        forward[t] = (w, T)
        fibers[w].append(t)
    return forward, fibers


def unique_preimage(t, w):
    """The tableau t1 with t = t1 * d(omega) (block letters contiguous)."""
    return t.act(pinv(w.d))


# ---------------------------------------------------------------------------
# block splitting


def std_block(t, p, k, a):
    """Block k of a standard tableau in Std(shape)_0, letters shifted down
    by a[k-1] so the result is standard of the block shape."""
    off = p.offsets[k - 1]
    shape_k = comp_block(t.shape, p, k)
    rows = tuple(
        tuple(tuple(x - a[k - 1] for x in row) for row in t.rows[off + c])
        for c in range(p.parts[k - 1])
    )
    tk = StdTableau(shape_k, rows)
    letters = sorted(
        x + a[k - 1] for comp in rows for row in comp for x in row
    )
    if letters != list(range(a[k - 1] + 1, a[k - 1] + 1 + shape_k.n)):
        raise BlockMismatch("tableau letters are not block-contiguous")
    return tk


def semi_block(T, p, k):
    """Block k of a semistandard tableau, component indices made local."""
    off = p.offsets[k - 1]
    shape_k = comp_block(T.shape, p, k)
    rows = tuple(
        tuple(
            tuple((i, kk - off) for (i, kk) in row) for row in T.rows[off + c]
        )
        for c in range(p.parts[k - 1])
    )
    return SemiTableau(shape_k, rows)


def std_zero(shape, p):
    """Standard tableaux whose block letters are contiguous runs."""
    _, a = alpha_and_a(shape, p)
    out = []
    for t in std_tableaux(shape):
        letters = []
        for k in range(1, p.g + 1):
            off = p.offsets[k - 1]
            blk = sorted(
                x
                for c in range(p.parts[k - 1])
                for row in t.rows[off + c]
                for x in row
            )
            nk = len(blk)
            if blk != list(range(a[k - 1] + 1, a[k - 1] + 1 + nk)):
                break
            letters.append(blk)
        else:
            out.append(t)
    return out
