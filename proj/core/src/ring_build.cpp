#include <algorithm>
#include <functional>

#include "ringlab/linalg.hpp"
#include "ringlab/ringspec.hpp"

namespace ringlab {

namespace {

RingPtr make_ring(long long size, const std::string& recipe,
                  const std::function<int(int, int)>& add,
                  const std::function<int(int, int)>& mul, int one,
                  const Bounds& bounds, std::optional<TriInfo> tri = std::nullopt) {
    if (size > bounds.max_ring_size)
        throw BoundExceeded("ring '" + recipe + "' has " + std::to_string(size) +
                            " elements, exceeding the ring size bound " +
                            std::to_string(bounds.max_ring_size));
    auto r = std::make_shared<Ring>();
    r->size = static_cast<int>(size);
    r->one = one;
    r->recipe = recipe;
    r->tri = std::move(tri);
    r->add_tab.assign(size * size, 0);
    r->mul_tab.assign(size * size, 0);
    for (int a = 0; a < size; ++a)
        for (int b = 0; b < size; ++b) {
            r->add_tab[static_cast<std::size_t>(a) * size + b] = add(a, b);
            r->mul_tab[static_cast<std::size_t>(a) * size + b] = mul(a, b);
        }
    r->seal();
    return r;
}

RingPtr build_zmod(long long n, const Bounds& bounds) {
    return make_ring(
        n, "zmod(" + std::to_string(n) + ")",
        [n](int a, int b) { return static_cast<int>((a + b) % n); },
        [n](int a, int b) { return static_cast<int>((1LL * a * b) % n); }, 1, bounds);
}

RingPtr build_gf(const RingSpec& s, const Bounds& bounds) {
    auto F = Field::gf(s.p, s.k, bounds);
    return make_ring(
        F->size(), s.print(), [F](int a, int b) { return F->add(a, b); },
        [F](int a, int b) { return F->mul(a, b); }, F->one(), bounds);
}

RingPtr build_prod(const RingSpec& s, const Bounds& bounds) {
    std::vector<RingPtr> fac;
    long long size = 1;
    for (const auto& c : s.children) {
        fac.push_back(build_ring(c, bounds));
        size *= fac.back()->size;
        if (size > bounds.max_ring_size) throw BoundExceeded("prod exceeds ring size bound");
    }
    // first factor least significant
    auto split = [fac](int code) {
        std::vector<int> out(fac.size());
        for (std::size_t i = 0; i < fac.size(); ++i) {
            out[i] = code % fac[i]->size;
            code /= fac[i]->size;
        }
        return out;
    };
    auto join = [fac](const std::vector<int>& v) {
        int code = 0;
        for (std::size_t i = fac.size(); i-- > 0;) code = code * fac[i]->size + v[i];
        return code;
    };
    int one = 0;
    {
        std::vector<int> ones(fac.size());
        for (std::size_t i = 0; i < fac.size(); ++i) ones[i] = fac[i]->one;
        one = join(ones);
    }
    return make_ring(
        size, s.print(),
        [=](int a, int b) {
            auto va = split(a), vb = split(b);
            for (std::size_t i = 0; i < fac.size(); ++i) va[i] = fac[i]->add(va[i], vb[i]);
            return join(va);
        },
        [=](int a, int b) {
            auto va = split(a), vb = split(b);
            for (std::size_t i = 0; i < fac.size(); ++i) va[i] = fac[i]->mul(va[i], vb[i]);
            return join(va);
        },
        one, bounds);
}

RingPtr build_mat(const RingSpec& s, const Bounds& bounds) {
    RingPtr base = build_ring(s.children[0], bounds);
    const int k = static_cast<int>(s.n);
    const int kk = k * k;
    long long size = 1;
    for (int i = 0; i < kk; ++i) {
        size *= base->size;
        if (size > bounds.max_ring_size) throw BoundExceeded("mat exceeds ring size bound");
    }
    auto split = [=](int code) {
        std::vector<int> e(kk);
        for (int i = 0; i < kk; ++i) {
            e[i] = code % base->size;
            code /= base->size;
        }
        return e;
    };
    auto join = [=](const std::vector<int>& e) {
        int code = 0;
        for (int i = kk; i-- > 0;) code = code * base->size + e[i];
        return code;
    };
    int one;
    {
        std::vector<int> e(kk, 0);
        for (int i = 0; i < k; ++i) e[i * k + i] = base->one;
        one = join(e);
    }
    return make_ring(
        size, s.print(),
        [=](int a, int b) {
            auto ea = split(a), eb = split(b);
            for (int i = 0; i < kk; ++i) ea[i] = base->add(ea[i], eb[i]);
            return join(ea);
        },
        [=](int a, int b) {
            auto ea = split(a), eb = split(b);
            std::vector<int> ec(kk, 0);
            for (int i = 0; i < k; ++i)
                for (int t = 0; t < k; ++t)
                    for (int j = 0; j < k; ++j)
                        ec[i * k + j] = base->add(ec[i * k + j], base->mul(ea[i * k + t], eb[t * k + j]));
            return join(ec);
        },
        one, bounds);
}

RingPtr build_tri(const RingSpec& s, const Bounds& bounds) {
    auto F = Field::gf(s.children[0].p, s.children[0].k, bounds);
    const int n = static_cast<int>(s.n);
    std::vector<Mat> dprime;
    switch (s.dsrc) {
        case RingSpec::Dsrc::Gen: {
            std::vector<Mat> gens;
            for (const auto& lit : s.gen_mats) {
                if (static_cast<int>(lit.size()) != n)
                    throw SemanticError("tri: generator matrix must be " + std::to_string(n) + "x" +
                                        std::to_string(n));
                Mat m(F, n, n);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) m.at(i, j) = F->from_int(lit[i][j]);
                gens.push_back(std::move(m));
            }
            dprime = subalgebra_closure(gens, F, bounds.max_ring_size).elems;
            break;
        }
        case RingSpec::Dsrc::Companion: {
            std::vector<int> coeffs;
            for (long long c : s.comp_poly) coeffs.push_back(F->from_int(c));
            Poly P(F, coeffs);
            if (P.degree() != n)
                throw SemanticError("tri: companion polynomial degree must equal the matrix size");
            if (!P.monic()) throw SemanticError("tri: companion polynomial must be monic");
            if (!poly_irreducible(P)) throw SemanticError("tri: companion polynomial must be irreducible");
            dprime = subalgebra_closure({companion(P)}, F, bounds.max_ring_size).elems;
            break;
        }
        case RingSpec::Dsrc::Scalars: {
            for (int a = 0; a < F->size(); ++a) dprime.push_back(Mat::scalar(F, n, a));
            std::sort(dprime.begin(), dprime.end());
            break;
        }
        case RingSpec::Dsrc::Full: {
            if (n != 1) throw SemanticError("tri: 'full' requires n = 1");
            for (int a = 0; a < F->size(); ++a) dprime.push_back(Mat(F, 1, 1, {a}));
            std::sort(dprime.begin(), dprime.end());
            break;
        }
        case RingSpec::Dsrc::None:
            throw SemanticError("tri: missing matrix source");
    }
    const long long q = F->size();
    long long qn = 1;
    for (int i = 0; i < n; ++i) qn *= q;
    const long long dp = static_cast<long long>(dprime.size());
    const long long size = q * qn * dp;

    std::map<std::vector<int>, int> dpindex;
    for (std::size_t i = 0; i < dprime.size(); ++i) dpindex[dprime[i].a] = static_cast<int>(i);

    auto decode = [=](int code, int& d, std::vector<int>& v, int& ai) {
        ai = static_cast<int>(code % dp);
        code /= static_cast<int>(dp);
        v.assign(n, 0);
        for (int i = 0; i < n; ++i) {
            v[i] = static_cast<int>(code % q);
            code /= static_cast<int>(q);
        }
        d = code;
    };
    auto encode = [=](int d, const std::vector<int>& v, int ai) {
        long long vcode = 0;
        for (int i = n; i-- > 0;) vcode = vcode * q + v[i];
        return static_cast<int>((d * qn + vcode) * dp + ai);
    };
    TriInfo info{F, n, dprime};
    int one_code;
    {
        Mat I = Mat::identity(F, n);
        one_code = encode(F->one(), std::vector<int>(n, 0), dpindex.at(I.a));
    }
    return make_ring(
        size, s.print(),
        [=](int a, int b) {
            int d1, d2, a1, a2;
            std::vector<int> v1, v2;
            decode(a, d1, v1, a1);
            decode(b, d2, v2, a2);
            for (int i = 0; i < n; ++i) v1[i] = F->add(v1[i], v2[i]);
            Mat sum = dprime[a1] + dprime[a2];
            return encode(F->add(d1, d2), v1, dpindex.at(sum.a));
        },
        [=](int a, int b) {
            int d1, d2, a1, a2;
            std::vector<int> v1, v2;
            decode(a, d1, v1, a1);
            decode(b, d2, v2, a2);
            // (d1,v1,A1)(d2,v2,A2) = (d1 d2, v1 d2 + A1 v2, A1 A2)
            std::vector<int> v(n, F->zero());
            for (int i = 0; i < n; ++i) {
                v[i] = F->mul(v1[i], d2);
                for (int j = 0; j < n; ++j)
                    v[i] = F->add(v[i], F->mul(dprime[a1].at(i, j), v2[j]));
            }
            Mat prod = dprime[a1] * dprime[a2];
            return encode(F->mul(d1, d2), v, dpindex.at(prod.a));
        },
        one_code, bounds, info);
}

RingPtr build_trimat(const RingSpec& s, const Bounds& bounds) {
    const RingSpec& sa = s.children[0];
    const RingSpec& sb = s.children[1];
    RingPtr A = build_ring(sa, bounds);
    RingPtr B = build_ring(sb, bounds);
    // Canonical bimodule: for zmod pairs with nB | nA, M = Z/nB with the
    // right A-action by reduction mod nB; for identical fields, M is the
    // field itself. Anything else needs explicit action tables, which this
    // build does not take.
    long long msize;
    std::function<int(int, int)> madd, right_act, left_act;
    if (sa.kind == RingSpec::Kind::Zmod && sb.kind == RingSpec::Kind::Zmod &&
        sa.n % sb.n == 0) {
        long long nb = sb.n;
        msize = nb;
        madd = [nb](int m, int m2) { return static_cast<int>((m + m2) % nb); };
        right_act = [nb](int m, int a) { return static_cast<int>((1LL * m * (a % nb)) % nb); };
        left_act = [nb](int b, int m) { return static_cast<int>((1LL * b * m) % nb); };
    } else if (sa.kind == RingSpec::Kind::Gf && sb.kind == RingSpec::Kind::Gf &&
               sa.p == sb.p && sa.k == sb.k) {
        auto F = Field::gf(sa.p, sa.k, bounds);
        msize = F->size();
        madd = [F](int m, int m2) { return F->add(m, m2); };
        right_act = [F](int m, int a) { return F->mul(m, a); };
        left_act = [F](int b, int m) { return F->mul(b, m); };
    } else {
        throw SemanticError("trimat: no canonical bimodule for these factors");
    }
    const long long size = static_cast<long long>(A->size) * msize * B->size;
    auto decode = [=](int code, int& a, int& m, int& b) {
        a = code % A->size;
        code /= A->size;
        m = static_cast<int>(code % msize);
        b = code / static_cast<int>(msize);
    };
    auto encode = [=](int a, int m, int b) {
        return (b * static_cast<int>(msize) + m) * A->size + a;
    };
    int one = encode(A->one, 0, B->one);
    return make_ring(
        size, s.print(),
        [=](int x, int y) {
            int a1, m1, b1, a2, m2, b2;
            decode(x, a1, m1, b1);
            decode(y, a2, m2, b2);
            return encode(A->add(a1, a2), madd(m1, m2), B->add(b1, b2));
        },
        [=](int x, int y) {
            int a1, m1, b1, a2, m2, b2;
            decode(x, a1, m1, b1);
            decode(y, a2, m2, b2);
            // [[a,0],[m,b]] * [[a',0],[m',b']] = [[aa',0],[m a' + b m', bb']]
            return encode(A->mul(a1, a2), madd(right_act(m1, a2), left_act(b1, m2)),
                          B->mul(b1, b2));
        },
        one, bounds);
}

RingPtr build_idealize(const RingSpec& s, const Bounds& bounds) {
    auto F = Field::gf(s.children[0].p, s.children[0].k, bounds);
    const int m = static_cast<int>(s.n);
    const long long q = F->size();
    long long size = q;
    for (int i = 0; i < m; ++i) size *= q;
    auto decode = [=](int code, int& a, std::vector<int>& v) {
        a = static_cast<int>(code % q);
        code /= static_cast<int>(q);
        v.assign(m, 0);
        for (int i = 0; i < m; ++i) {
            v[i] = static_cast<int>(code % q);
            code /= static_cast<int>(q);
        }
    };
    auto encode = [=](int a, const std::vector<int>& v) {
        long long code = 0;
        for (int i = m; i-- > 0;) code = code * q + v[i];
        return static_cast<int>(code * q + a);
    };
    return make_ring(
        size, s.print(),
        [=](int x, int y) {
            int a, b;
            std::vector<int> v, w;
            decode(x, a, v);
            decode(y, b, w);
            for (int i = 0; i < m; ++i) v[i] = F->add(v[i], w[i]);
            return encode(F->add(a, b), v);
        },
        [=](int x, int y) {
            int a, b;
            std::vector<int> v, w;
            decode(x, a, v);
            decode(y, b, w);
            // (a,v)(b,w) = (ab, aw + vb)
            std::vector<int> u(m);
            for (int i = 0; i < m; ++i) u[i] = F->add(F->mul(a, w[i]), F->mul(v[i], b));
            return encode(F->mul(a, b), u);
        },
        encode(F->one(), std::vector<int>(m, 0)), bounds);
}

}  // namespace

int tri_encode(const Ring& r, int d, const std::vector<int>& col, int aidx) {
    const auto& t = *r.tri;
    const long long q = t.D->size();
    long long qn = 1;
    for (int i = 0; i < t.n; ++i) qn *= q;
    long long vcode = 0;
    for (int i = t.n; i-- > 0;) vcode = vcode * q + col[i];
    return static_cast<int>((d * qn + vcode) * static_cast<long long>(t.dprime.size()) + aidx);
}

void tri_decode(const Ring& r, int code, int& d, std::vector<int>& col, int& aidx) {
    const auto& t = *r.tri;
    const int dp = static_cast<int>(t.dprime.size());
    const int q = static_cast<int>(t.D->size());
    aidx = code % dp;
    code /= dp;
    col.assign(t.n, 0);
    for (int i = 0; i < t.n; ++i) {
        col[i] = code % q;
        code /= q;
    }
    d = code;
}

RingPtr build_ring(const RingSpec& spec, const Bounds& bounds) {
    switch (spec.kind) {
        case RingSpec::Kind::Zmod: return build_zmod(spec.n, bounds);
        case RingSpec::Kind::Gf: return build_gf(spec, bounds);
        case RingSpec::Kind::Prod: return build_prod(spec, bounds);
        case RingSpec::Kind::MatRing: return build_mat(spec, bounds);
        case RingSpec::Kind::Tri: return build_tri(spec, bounds);
        case RingSpec::Kind::Trimat: return build_trimat(spec, bounds);
        case RingSpec::Kind::Idealize: return build_idealize(spec, bounds);
    }
    throw SemanticError("unknown ring spec");
}

}  // namespace ringlab
