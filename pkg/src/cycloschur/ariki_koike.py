"""The cyclotomic Hecke algebra of type G(r, 1, n) and its cell elements.

The algebra is free of rank n! * r^n with basis

    L_1^{c_1} .. L_n^{c_n} T_w,   0 <= c_i < r,  w in S_n,

where T_1..T_{n-1} are the braid generators, T_0 = L_1 satisfies the degree-r
cyclotomic relation, and L_{k+1} = T_k L_k T_k.  Elements are coefficient row
vectors of length N = n! * r^n over a scalar domain (generic Laurent ring,
rationals, or a prime field).

The whole multiplication table is precomputed: ``Mstack[m]`` is the N x N
matrix of right multiplication by basis element m, so a * b is two tensor
contractions.  Everything downstream (cell elements, module actions, Schur
algebra structure constants) reduces to matrix algebra against this stack.
Cost is O(N^4) scalar operations once per context; the supported sizes keep
N <= 48 for exact object arithmetic and the prime-field path vectorizes.
"""

from __future__ import annotations

import itertools

import numpy as np

from .combinatorics import (
    MultiComposition,
    all_perms,
    mu_of_std,
    perm_identity,
    pinv,
    pmul,
    reduced_word,
    std_tableaux,
)


class HeckeContext:
    """Exact regular representation of the rank-(r, n) algebra.

    ``ring`` is a scalar domain; ``qv`` and ``Qv`` are its elements (q must
    be a unit, the Q need satisfy nothing generically).
    """

    def __init__(self, n, r, ring, qv, Qv):
        if len(Qv) != r:
            raise ValueError("need one cyclotomic parameter per component")
        self.n = n
        self.r = r
        self.ring = ring
        self.q = ring.el(qv)
        self.qinv = ring.inv(self.q)
        self.Q = tuple(ring.el(x) for x in Qv)
        self.qdiff = ring.reduce_scalar(self.q - self.qinv)

        self.perms, self.plens = all_perms(n)
        self.pindex = {w: i for i, w in enumerate(self.perms)}
        self.exps = list(itertools.product(range(r), repeat=n))
        self.eindex = {c: i for i, c in enumerate(self.exps)}
        self.basis = [(c, w) for c in self.exps for w in self.perms]
        self.bindex = {b: i for i, b in enumerate(self.basis)}
        self.N = len(self.basis)
        self.id_perm = perm_identity(n)
        self.id_idx = self.bindex[((0,) * n, self.id_perm)]

        self.esym = self._elementary_symmetric()
        self._push_memo = {}
        self._lmono_memo = {}
        self.V = self._overflow_elements()
        self.RT = {i: self._elementary_T(i) for i in range(1, n)}
        self.RL = {k: self._elementary_L(k) for k in range(1, n + 1)}
        self.Mstack = self._build_mstack()
        self.star_mat = self._build_star()

    # -- construction -------------------------------------------------------

    def _elementary_symmetric(self):
        # e[j] = j-th elementary symmetric polynomial in the Q parameters
        e = [self.ring.one] + [self.ring.zero] * self.r
        for Qj in self.Q:
            for j in range(self.r, 0, -1):
                e[j] = self.ring.reduce_scalar(e[j] + Qj * e[j - 1])
        return e

    def _rmul_T_term(self, w, i):
        """T_w T_i in the T basis: [(w', coeff)]."""
        ws = tuple(
            i + 1 if x == i else i if x == i + 1 else x for x in w
        )
        if w.index(i) < w.index(i + 1):
            return [(ws, self.ring.one)]
        return [(ws, self.ring.one), (w, self.qdiff)]

    def _push(self, w, k):
        """T_w L_k as a combination of L_{k'} T_{w'} terms.

        Returns a dict {(k', w'): coeff}; each term carries one L factor.
        """
        key = (w, k)
        if key in self._push_memo:
            return self._push_memo[key]
        if w == self.id_perm:
            out = {(k, w): self.ring.one}
            self._push_memo[key] = out
            return out
        # strip the last letter i of a reduced word: w = u * s_i, u shorter
        i = next(
            j for j in range(1, self.n) if w.index(j) > w.index(j + 1)
        )
        u = tuple(i + 1 if x == i else i if x == i + 1 else x for x in w)
        out = {}

        def add(kk, ww, cf):
            cur = out.get((kk, ww), self.ring.zero)
            out[(kk, ww)] = self.ring.reduce_scalar(cur + cf)

        def append_T(terms, scale=None):
            for (kk, ww), cf in terms.items():
                if scale is not None:
                    cf = self.ring.reduce_scalar(cf * scale)
                for w2, c2 in self._rmul_T_term(ww, i):
                    add(kk, w2, self.ring.reduce_scalar(cf * c2))

        if k not in (i, i + 1):
            append_T(self._push(u, k))
        elif k == i:
            # T_i L_i = L_{i+1} T_i - (q - q^-1) L_{i+1}
            g = self._push(u, i + 1)
            append_T(g)
            for (kk, ww), cf in g.items():
                add(kk, ww, self.ring.reduce_scalar(-(cf * self.qdiff)))
        else:
            # T_i L_{i+1} = L_i T_i + (q - q^-1) L_{i+1}
            append_T(self._push(u, i))
            for (kk, ww), cf in self._push(u, i + 1).items():
                add(kk, ww, self.ring.reduce_scalar(cf * self.qdiff))
        out = {m: c for m, c in out.items() if c != self.ring.zero}
        self._push_memo[key] = out
        return out

    # -- overflow reduction -------------------------------------------------
    #
    # Only L_1 satisfies the degree-r cyclotomic relation.  The r-th power of
    # a higher element reduces through
    #
    #     L_k^r = T_{k-1} L_{k-1}^r T_{k-1}
    #             + (q - q^-1) sum_{b=1}^{r-1} L_k^b L_{k-1}^{r-b} T_{k-1},
    #
    # a consequence of T L^a = L'^a T - (q - q^-1) sum_{u<=a} L'^u L^{a-u}
    # for the pair L = L_{k-1}, L' = L_k.  Bootstrapping k = 1..n expresses
    # each L_k^r in the normal-form basis with no circular reductions.

    def _dict_add(self, out, key, cf):
        cur = out.get(key, self.ring.zero)
        val = self.ring.reduce_scalar(cur + cf)
        if val == self.ring.zero:
            out.pop(key, None)
        else:
            out[key] = val

    def _dict_rmul_word(self, vec, word):
        for i in word:
            nxt = {}
            for (c, w), cf in vec.items():
                for w2, c2 in self._rmul_T_term(w, i):
                    self._dict_add(
                        nxt, (c, w2), self.ring.reduce_scalar(cf * c2)
                    )
            vec = nxt
        return vec

    def _overflow_elements(self):
        ring = self.ring
        n, r = self.n, self.r
        ident = self.id_perm
        V = {}
        first = {}
        sign = 1
        for j in range(1, r + 1):
            c = [0] * n
            c[0] = r - j
            first[(tuple(c), ident)] = ring.reduce_scalar(sign * self.esym[j])
            sign = -sign
        V[1] = first
        for k in range(2, n + 1):
            out = {}
            for (c, w), v in V[k - 1].items():
                a = c[k - 2]
                base = list(c)
                base[k - 2] = 0
                word_w = reduced_word(w)
                # T_{k-1} L_{k-1}^a -> L_k^a T_{k-1} - delta * sum ...
                lead = list(base)
                lead[k - 1] = a
                for part in self._dict_rmul_word(
                    {(tuple(lead), ident): v}, [k - 1] + word_w + [k - 1]
                ).items():
                    self._dict_add(out, *part)
                for u in range(1, a + 1):
                    mid = list(base)
                    mid[k - 1] = u
                    mid[k - 2] = a - u
                    cf = ring.reduce_scalar(-(v * self.qdiff))
                    for part in self._dict_rmul_word(
                        {(tuple(mid), ident): cf}, word_w + [k - 1]
                    ).items():
                        self._dict_add(out, *part)
            for b in range(1, r):
                c = [0] * n
                c[k - 1] = b
                c[k - 2] = r - b
                for part in self._dict_rmul_word(
                    {(tuple(c), ident): self.qdiff}, [k - 1]
                ).items():
                    self._dict_add(out, *part)
            V[k] = out
        return V

    def _lmono(self, c):
        """The monomial prod L_j^{c_j} in normal form; entries may be >= r."""
        if c in self._lmono_memo:
            return self._lmono_memo[c]
        if all(x < self.r for x in c):
            out = {(c, self.id_perm): self.ring.one}
        else:
            j = max(i for i in range(self.n) if c[i] >= self.r) + 1
            rest = list(c)
            rest[j - 1] -= self.r
            out = {}
            for (d, u), v in self.V[j].items():
                merged = tuple(x + y for x, y in zip(rest, d))
                sub = self._dict_rmul_word(self._lmono(merged), reduced_word(u))
                for key, cf in sub.items():
                    self._dict_add(out, key, self.ring.reduce_scalar(v * cf))
        self._lmono_memo[c] = out
        return out

    def _elementary_T(self, i):
        M = self.ring.zeros((self.N, self.N))
        for j, (c, w) in enumerate(self.basis):
            for w2, cf in self._rmul_T_term(w, i):
                M[j, self.bindex[(c, w2)]] = cf
        return M

    def _elementary_L(self, k):
        M = self.ring.zeros((self.N, self.N))
        for j, (c, w) in enumerate(self.basis):
            for (kk, ww), cf in self._push(w, k).items():
                c2 = list(c)
                c2[kk - 1] += 1
                c2 = tuple(c2)
                if c2[kk - 1] < self.r:
                    tgt = self.bindex[(c2, ww)]
                    M[j, tgt] = self.ring.reduce_scalar(M[j, tgt] + cf)
                else:
                    vec = self._dict_rmul_word(
                        self._lmono(c2), reduced_word(ww)
                    )
                    for (c3, w3), cf3 in vec.items():
                        tgt = self.bindex[(c3, w3)]
                        M[j, tgt] = self.ring.reduce_scalar(
                            M[j, tgt] + cf * cf3
                        )
        return M

    def _build_mstack(self):
        ring = self.ring
        N = self.N
        stack = np.empty((N, N, N), dtype=ring.dtype)
        # right multiplication matrices of T_w, by increasing length
        tmats = {self.id_perm: ring.eye(N)}
        for w in sorted(self.perms, key=lambda x: self.plens[self.pindex[x]]):
            if w in tmats:
                continue
            i = next(
                j for j in range(1, self.n) if w.index(j) > w.index(j + 1)
            )
            u = tuple(i + 1 if x == i else i if x == i + 1 else x for x in w)
            tmats[w] = ring.reduce(tmats[u] @ self.RT[i])
        # the L part: c built up one exponent at a time
        lmats = {(0,) * self.n: ring.eye(N)}
        for c in self.exps:
            if c in lmats:
                continue
            k = max(i for i in range(self.n) if c[i] > 0)
            c0 = list(c)
            c0[k] -= 1
            lmats[c] = ring.reduce(lmats[tuple(c0)] @ self.RL[k + 1])
        for m, (c, w) in enumerate(self.basis):
            stack[m] = ring.reduce(lmats[c] @ tmats[w])
        return stack

    def _build_star(self):
        # star(L^c T_w) = T_{w^-1} L^c; rows computed by exponent ladders
        ring = self.ring
        S = ring.zeros((self.N, self.N))
        for w in self.perms:
            base = ring.zeros(self.N)
            base[self.bindex[((0,) * self.n, pinv(w))]] = ring.one
            rows = {(0,) * self.n: base}
            for c in self.exps:
                if c in rows:
                    continue
                k = max(i for i in range(self.n) if c[i] > 0)
                c0 = list(c)
                c0[k] -= 1
                rows[c] = ring.reduce(rows[tuple(c0)] @ self.RL[k + 1])
            for c in self.exps:
                S[self.bindex[(c, w)]] = rows[c]
        return S

    # -- element arithmetic -------------------------------------------------

    def unit(self):
        v = self.ring.zeros(self.N)
        v[self.id_idx] = self.ring.one
        return v

    def basis_vec(self, m):
        v = self.ring.zeros(self.N)
        v[m] = self.ring.one
        return v

    def T_vec(self, w):
        return self.basis_vec(self.bindex[((0,) * self.n, w)])

    def L_vec(self, k):
        c = [0] * self.n
        c[k - 1] = 1
        return self.basis_vec(self.bindex[(tuple(c), self.id_perm)])

    def right_mult_matrix(self, b):
        """R with a * b = a @ R."""
        return self.ring.reduce(np.tensordot(b, self.Mstack, axes=([0], [0])))

    def left_mult_matrix(self, a):
        """L with a * b = b @ L; row i of L is a * basis_i."""
        return self.ring.reduce(np.tensordot(a, self.Mstack, axes=([0], [1])))

    def mult(self, a, b):
        return self.ring.reduce(a @ self.right_mult_matrix(b))

    def star(self, a):
        return self.ring.reduce(a @ self.star_mat)

    def apply_word(self, v, word):
        """v * T_{i1} * ... * T_{il} for a list of generator indices."""
        for i in word:
            v = self.ring.reduce(v @ self.RT[i])
        return v

    def apply_T(self, v, w):
        return self.apply_word(v, reduced_word(w))

    def apply_L(self, v, k, times=1):
        for _ in range(times):
            v = self.ring.reduce(v @ self.RL[k])
        return v

    def q_power(self, e):
        base = self.q if e >= 0 else self.qinv
        out = self.ring.one
        for _ in range(abs(e)):
            out = self.ring.reduce_scalar(out * base)
        return out

    def scale(self, cf, v):
        return self.ring.reduce(v * cf)

    # -- defining relations, checked in the regular representation ----------

    def relations_report(self):
        """Each defining (and derived Murphy) relation as a matrix identity.

        The regular representation is faithful on a free module, so these
        matrix identities are equivalent to the algebra relations.
        """
        ring = self.ring
        n = self.n
        eye = ring.eye(self.N)
        zero = ring.zeros((self.N, self.N))
        T0 = self.RL[1]
        rep = {}

        cyc = eye
        for Qj in self.Q:
            cyc = ring.reduce(cyc @ ring.reduce(T0 - Qj * eye))
        rep["cyclotomic"] = ring.equal(cyc, zero)

        rep["quadratic"] = all(
            ring.equal(
                ring.reduce(
                    ring.reduce(self.RT[i] - self.q * eye)
                    @ ring.reduce(self.RT[i] + self.qinv * eye)
                ),
                zero,
            )
            for i in range(1, n)
        )

        if n >= 2:
            a = ring.reduce(T0 @ self.RT[1])
            b = ring.reduce(self.RT[1] @ T0)
            rep["mixed_braid"] = ring.equal(
                ring.reduce(a @ a), ring.reduce(b @ b)
            )
        else:
            rep["mixed_braid"] = True

        rep["braid"] = all(
            ring.equal(
                ring.reduce(self.RT[i] @ self.RT[i + 1] @ self.RT[i]),
                ring.reduce(self.RT[i + 1] @ self.RT[i] @ self.RT[i + 1]),
            )
            for i in range(1, n - 1)
        )

        rep["commuting"] = all(
            ring.equal(
                ring.reduce(self.RT[i] @ self.RT[j]),
                ring.reduce(self.RT[j] @ self.RT[i]),
            )
            for i in range(1, n)
            for j in range(i + 2, n)
        ) and all(
            ring.equal(
                ring.reduce(T0 @ self.RT[i]), ring.reduce(self.RT[i] @ T0)
            )
            for i in range(2, n)
        )

        rep["jm_tower"] = all(
            ring.equal(
                self.RL[i + 1],
                ring.reduce(self.RT[i] @ self.RL[i] @ self.RT[i]),
            )
            for i in range(1, n)
        )

        rep["jm_commute"] = all(
            ring.equal(
                ring.reduce(self.RL[j] @ self.RL[k]),
                ring.reduce(self.RL[k] @ self.RL[j]),
            )
            for j in range(1, n + 1)
            for k in range(j + 1, n + 1)
        )

        rep["jm_skew"] = all(
            ring.equal(
                ring.reduce(self.RT[i] @ self.RL[k]),
                ring.reduce(self.RL[k] @ self.RT[i]),
            )
            for i in range(1, n)
            for k in range(1, n + 1)
            if k not in (i, i + 1)
        ) and all(
            ring.equal(
                ring.reduce(self.RT[i] @ self.RL[i]),
                ring.reduce(
                    self.RL[i + 1] @ self.RT[i] - self.qdiff * self.RL[i + 1]
                ),
            )
            for i in range(1, n)
        )

        return rep

    # -- cell elements ------------------------------------------------------

    def young_subgroup(self, comp):
        """All permutations preserving the consecutive blocks of ``comp``
        (the concatenated row lengths of a multicomposition)."""
        blocks = []
        start = 1
        for c in comp.comps:
            for rowlen in c:
                if rowlen:
                    blocks.append(tuple(range(start, start + rowlen)))
                    start += rowlen
        out = []
        for parts in itertools.product(
            *(itertools.permutations(b) for b in blocks)
        ):
            img = [0] * self.n
            for block, perm in zip(blocks, parts):
                for src, tgt in zip(block, perm):
                    img[src - 1] = tgt
            out.append(tuple(img))
        return out

    def x_vec(self, mu):
        """Sum of q^len(w) T_w over the row-stabilizer of mu."""
        v = self.ring.zeros(self.N)
        c0 = (0,) * self.n
        for w in self.young_subgroup(mu):
            v[self.bindex[(c0, w)]] = self.q_power(
                self.plens[self.pindex[w]]
            )
        return v

    def uplus_ladder(self, v, a):
        """v * prod_k prod_{i<=a_k} (L_i - Q_k)."""
        for k, ak in enumerate(a):
            for i in range(1, ak + 1):
                v = self.ring.reduce(
                    self.apply_L(v, i) - self.Q[k] * v
                )
        return v

    def m_vec(self, mu, a):
        """The product of the cyclotomic ladder and the q-symmetrizer."""
        return self.uplus_ladder(self.x_vec(mu), a)

    def std_pair_vec(self, m_lam, s, t):
        """Conjugate of m_lam by the tableau permutations d(s), d(t)."""
        v = self.apply_T(m_lam, t.d_perm())
        return self.star(self.apply_T(self.star(v), s.d_perm()))


# ---------------------------------------------------------------------------
# cell data shared by the Schur-algebra layers


class MurphyData:
    """Cell elements m_{St} and m_{ST} for one Hecke context.

    Shapes and types are multicompositions; ``a_of`` must give the cyclotomic
    ladder bounds for each type (partial block sizes).  All vectors are rows
    in the Hecke basis.
    """

    def __init__(self, ctx, a_of):
        self.ctx = ctx
        self.a_of = a_of
        self._m = {}
        self._fibers = {}
        self._A = {}
        self._left = {}

    def m_mu(self, mu):
        if mu not in self._m:
            self._m[mu] = self.ctx.m_vec(mu, self.a_of(mu))
        return self._m[mu]

    def fibers(self, lam, mu):
        """Map semistandard S to its list of standard preimages."""
        key = (lam, mu)
        if key not in self._fibers:
            out = {}
            for s in std_tableaux(lam):
                out.setdefault(mu_of_std(mu, s), []).append(s)
            self._fibers[key] = out
        return self._fibers[key]

    def A_vec(self, lam, mu, S):
        """Sum of q^len(d(s)) T_{d(s)} over the fiber of S."""
        key = (lam, mu, S)
        if key not in self._A:
            ctx = self.ctx
            v = ctx.ring.zeros(ctx.N)
            c0 = (0,) * ctx.n
            for s in self.fibers(lam, mu)[S]:
                d = s.d_perm()
                v[ctx.bindex[(c0, d)]] = ctx.q_power(
                    ctx.plens[ctx.pindex[d]]
                )
            self._A[key] = v
        return self._A[key]

    def _left_mat(self, lam, mu, S):
        """Left multiplication by star(A_vec(S))."""
        key = (lam, mu, S)
        if key not in self._left:
            ctx = self.ctx
            self._left[key] = ctx.left_mult_matrix(
                ctx.star(self.A_vec(lam, mu, S))
            )
        return self._left[key]

    def m_St(self, lam, mu, S, t):
        """Row-semistandard on the left, standard on the right."""
        ctx = self.ctx
        d = t.d_perm()
        v = ctx.scale(
            ctx.q_power(ctx.plens[ctx.pindex[d]]),
            ctx.apply_T(self.m_mu(lam), d),
        )
        return ctx.ring.reduce(v @ self._left_mat(lam, mu, S))

    def m_ST(self, lam, mu, S, nu, T):
        ctx = self.ctx
        v = ctx.mult(self.m_mu(lam), self.A_vec(lam, nu, T))
        return ctx.ring.reduce(v @ self._left_mat(lam, mu, S))

    def m_ST_block(self, lam, left_list, right_list):
        """Stack of m_ST vectors, rows indexed by (S index, T index).

        ``left_list`` and ``right_list`` hold (type, tableau) pairs; the
        result has shape (len(left) * len(right), N) with T varying fastest.
        """
        ctx = self.ctx
        P = ctx.left_mult_matrix(self.m_mu(lam))
        A_T = np.stack([self.A_vec(lam, nu, T) for nu, T in right_list])
        X = ctx.ring.reduce(A_T @ P)  # rows: m_lam * A_T
        out = []
        for mu, S in left_list:
            out.append(ctx.ring.reduce(X @ self._left_mat(lam, mu, S)))
        return np.concatenate(out, axis=0)
