#include "symp/checks.hpp"

#include "symp/casson.hpp"
#include "symp/catalogs.hpp"
#include "symp/free_lie.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <stdexcept>

namespace symp {

std::string to_string(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Observed: return "observed";
        case Status::Skipped: return "skipped";
    }
    return "fail";
}

const std::vector<CheckInfo>& check_catalog() {
    static const std::vector<CheckInfo> all = {
        {"d2-rank", "rank of D2(H) from the bracket kernel and from the S2(Λ2H) relation count"},
        {"dprime2-index", "[D2(H) : D'2(H)] = 2^C(2g,2)"},
        {"trace-cokernels", "Tr^as and Tr^sym onto the omega kernels; cokernels of rank (g-1)(2g+1) and (g+1)(2g-1)"},
        {"johnson-kernel", "Ker Tr^as spanned by images of genus 1 and genus 2 bounding twists"},
        {"bracket-kernel", "Ker Tr^sym in D'2(H) equals [η1 D1, η1 D1]"},
        {"kernel-index", "[Ker Tr^as : Ker Tr^sym] = 2^(2g + C(2g,2))"},
        {"well-defined", "Tr^as, Tr^sym vanish on AS, IHX, linearity and doubling relations; η2(IHX) = 0"},
        {"levine-counterexample", "T1 in Ker(D2(H) -> D2(H')) ∩ Ker Tr^as with Tr^A(T1) = b'_j b'_j; Tr^A(T2) = 2 b'_i b'_j"},
        {"casson-bridge", "μ(v,S) = r(S, Tr^A v) on F0; μ(v,S) = (½ω_S + ω_δ)(Tr^{ω_S} v) on D2(H)"},
        {"qbar-lambda4", "q̄ vanishes on the image of Λ4H"},
        {"theorem-5.1", "handlebody catalog spans Ker Tr^A ∩ Ker Tr^as, asserted for g >= 4"},
        {"handlebody-sum", "Ker Tr^as = R + ι(R) for the handlebody catalog R, asserted for g >= 4"},
        {"goeritz-tau1", "GL(g,Z) and ι orbit of tree(a1,b1,b2) spans A∧B∧H"},
        {"goeritz-tau2", "Goeritz catalog spans Ker Tr^as ∩ Ker Tr^A ∩ Ker Tr^B, asserted for g >= 4"},
        {"d-core", "d(T_γ) = 4h(h-1) at h = 1, 2"},
    };
    return all;
}

bool known_check(const std::string& id) {
    const auto& all = check_catalog();
    return std::any_of(all.begin(), all.end(), [&](const CheckInfo& c) { return c.id == id; });
}

double estimated_minutes(const std::string& id, int genus) {
    if (id == "johnson-kernel" && genus >= 4) return 120;
    if (genus >= 4) return 1;
    return 0.1;
}

namespace {

std::size_t choose(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::size_t r = 1;
    for (int i = 0; i < k; ++i) r = r * static_cast<std::size_t>(n - i) / static_cast<std::size_t>(i + 1);
    return r;
}

Integer two_to(std::size_t e) { return pow(Integer(2), static_cast<unsigned>(e)); }

std::string str(const LatticeIndex& ix) { return ix.infinite ? "infinite" : ix.value.str(); }
std::string str(std::size_t x) { return std::to_string(x); }
std::string str(bool b) { return b ? "true" : "false"; }

// A basis vector of big outside small, for failure witnesses.
std::optional<IntVector> first_missing(const IntegerLattice& big, const IntegerLattice& small) {
    for (const auto& v : big.basis())
        if (!small.contains(v)) return v;
    return std::nullopt;
}

void set(CheckReport& r, bool ok) { r.status = ok ? Status::Pass : Status::Fail; }

HVector random_vector(int n, std::mt19937_64& rng, int bound = 2) {
    std::uniform_int_distribution<int> dist(-bound, bound);
    HVector v(n);
    for (auto& x : v) x = dist(rng);
    return v;
}

IntegerMatrix random_symmetric(int g, std::mt19937_64& rng, int bound = 3) {
    std::uniform_int_distribution<int> dist(-bound, bound);
    IntegerMatrix s(g, g);
    for (int i = 0; i < g; ++i)
        for (int j = i; j < g; ++j) s(i, j) = s(j, i) = dist(rng);
    return s;
}

// Compare a catalog lattice to a kernel; equality is only asserted when `assert_equal`.
void lattice_report(CheckReport& r, const IntegerLattice& cat, const IntegerLattice& ker, bool assert_equal) {
    bool inside = ker.contains(cat);
    r.witness["catalog_rank"] = str(cat.rank());
    r.witness["kernel_rank"] = str(ker.rank());
    r.witness["contained"] = str(inside);
    if (inside) r.witness["index"] = str(index(ker, cat));
    if (!inside) {
        r.status = Status::Fail;
        if (auto v = first_missing(cat, ker)) r.vectors["outside_kernel"] = to_strings(*v);
        return;
    }
    bool equal = cat == ker;
    if (assert_equal) {
        set(r, equal);
        if (!equal)
            if (auto v = first_missing(ker, cat)) r.vectors["not_spanned"] = to_strings(*v);
    } else {
        r.status = Status::Observed;
        r.note = "inclusion only; equality is not asserted at this genus";
    }
}

}  // namespace

CheckRunner::Context& CheckRunner::at(int genus) {
    auto& c = cache_[genus];
    if (!c.d) {
        c.d = std::make_unique<D2Space>(genus);
        c.t = std::make_unique<Traces>(*c.d);
    }
    return c;
}

const D2Space& CheckRunner::space(int genus) { return *at(genus).d; }
const Traces& CheckRunner::traces(int genus) { return *at(genus).t; }

CheckReport CheckRunner::run(const std::string& id, int genus) {
    if (!known_check(id)) throw std::invalid_argument("unknown check id: " + id);
    CheckReport r;
    r.id = id;
    r.genus = genus;
    for (const auto& c : check_catalog())
        if (c.id == id) r.anchor = c.anchor;

    const auto start = std::chrono::steady_clock::now();
    const int g = genus;
    const std::size_t m2 = choose(2 * g, 2);
    std::size_t id_pos = 0;
    while (check_catalog()[id_pos].id != id) ++id_pos;
    std::seed_seq seq{static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32),
                      static_cast<std::uint32_t>(genus), static_cast<std::uint32_t>(id_pos)};
    std::mt19937_64 rng(seq);

    try {
        if (id == "d-core") {
            r.witness["d_core_1"] = std::to_string(d_core(1));
            r.witness["d_core_2"] = std::to_string(d_core(2));
            set(r, d_core(1) == 0 && d_core(2) == 8);
        } else if (id == "goeritz-tau1") {
            SymplecticContext sp(g);
            auto orbit = tau1_orbit_lattice(sp, {{sp.a(1), sp.b(1), sp.b(2)}});
            auto abh = a_wedge_b_wedge_h(sp);
            std::size_t want = choose(2 * g, 3) - 2 * choose(g, 3);
            r.witness["orbit_rank"] = str(orbit.rank());
            r.witness["expected_rank"] = str(want);
            set(r, orbit == abh && orbit.rank() == want);
        } else {
            const auto& d = space(g);
            const auto& t = traces(g);
            const auto& sp = d.sp();
            const auto& ctx = d.ctx();

            if (id == "d2-rank") {
                const std::size_t table[] = {20, 105, 336};
                std::size_t kernel = d.bracket_kernel().rank(), count = morita_rank(g);
                r.witness["bracket_kernel_rank"] = str(kernel);
                r.witness["relation_count_rank"] = str(count);
                r.witness["basis_size"] = str(d.rank());
                bool ok = kernel == count && kernel == d.rank();
                if (g >= 2 && g <= 4) ok = ok && kernel == table[g - 2];
                set(r, ok);
            } else if (id == "dprime2-index") {
                auto ix = index(d.full(), d.dprime2());
                r.witness["index"] = str(ix);
                r.witness["expected"] = two_to(m2).str();
                set(r, ix == LatticeIndex{false, two_to(m2)});
            } else if (id == "trace-cokernels") {
                std::size_t as_dim = static_cast<std::size_t>((g - 1) * (2 * g + 1));
                std::size_t sym_dim = static_cast<std::size_t>((g + 1) * (2 * g - 1));
                auto ias = index(d.full(), t.ker_tr_as());
                auto isym = index(d.dprime2(), t.ker_tr_sym());
                r.witness["tr_as_image_rank"] = str(t.tr_as_image_rank());
                r.witness["tr_sym_image_rank"] = str(t.tr_sym_image_rank());
                r.witness["tr_as_cokernel_index"] = str(ias);
                r.witness["tr_sym_cokernel_index"] = str(isym);
                set(r, t.tr_as_image_rank() == as_dim && ext2_omega_kernel_dim(sp) == as_dim &&
                           t.tr_sym_image_rank() == sym_dim && sym2_omega_kernel_dim(sp) == sym_dim &&
                           ias == LatticeIndex{false, two_to(as_dim)} && isym == LatticeIndex{false, two_to(sym_dim)});
            } else if (id == "johnson-kernel") {
                Catalog c = johnson_catalog(t);
                r.witness["entries"] = str(c.entries.size());
                r.witness["color_terms"] = std::to_string(c.color_terms);
                lattice_report(r, catalog_lattice(d, c), t.ker_tr_as(), true);
            } else if (id == "bracket-kernel") {
                std::vector<Tree1> ones;
                for (int p = 0; p < sp.dim(); ++p)
                    for (int q = p + 1; q < sp.dim(); ++q)
                        for (int s = q + 1; s < sp.dim(); ++s) ones.push_back({sp.basis(p), sp.basis(q), sp.basis(s)});
                std::vector<IntVector> gens;
                for (std::size_t i = 0; i < ones.size(); ++i)
                    for (std::size_t j = i + 1; j < ones.size(); ++j) gens.push_back(d.coords(ones[i], ones[j]));
                lattice_report(r, d.lattice(gens), t.ker_tr_sym(), true);
                if (r.status == Status::Fail && g == 2) r.note = "[Λ3H, Λ3H] has rank at most C(4,2) = 6 at genus 2";
            } else if (id == "kernel-index") {
                auto ix = index(t.ker_tr_as(), t.ker_tr_sym());
                r.witness["index"] = str(ix);
                r.witness["expected"] = two_to(2 * g + m2).str();
                set(r, ix == LatticeIndex{false, two_to(2 * g + m2)});
            } else if (id == "well-defined") {
                const int n = sp.dim();
                std::size_t checked = 0, bad = 0;
                auto rv = [&] { return random_vector(n, rng); };
                while (checked < 1000) {
                    HVector a = rv(), b = rv(), c = rv(), e = rv(), f = rv();
                    const Combination rel[] = {
                        single(Tree2{a, b, c, e}) - single(Tree2{a, c, b, e}) + single(Tree2{a, e, b, c}),
                        single(Tree2{a, b, c, e}) + single(Tree2{b, a, c, e}),
                        single(Tree2{a, b, c, e}) - single(Tree2{c, e, a, b}),
                        single(Tree2{a + f, b, c, e}) - single(Tree2{a, b, c, e}) - single(Tree2{f, b, c, e}),
                        single(SymHalf{a, a}),
                        single(SymHalf{a, b}) - single(SymHalf{b, a}),
                        2 * single(SymHalf{a, b}) - single(Tree2{a, b, a, b}),
                        single(SymHalf{a + b, c}) - single(SymHalf{a, c}) - single(SymHalf{b, c}) - single(Tree2{a, c, b, c}),
                    };
                    for (std::size_t k = 0; k < std::size(rel); ++k, ++checked) {
                        bool ok = tr_as(sp, rel[k]).is_zero() && (k >= 4 || tr_sym(sp, rel[k]).is_zero());
                        if (!ok && bad++ == 0) r.witness["first_failure"] = "relation " + std::to_string(k) + ": " + describe(sp, rel[k].front().gen);
                    }
                }
                std::size_t ihx = 0, ihx_bad = 0;
                for (int p = 0; p < n; ++p)
                    for (int q = 0; q < n; ++q)
                        for (int s = 0; s < n; ++s)
                            for (int u = 0; u < n; ++u) {
                                HVector a = sp.basis(p), b = sp.basis(q), c = sp.basis(s), e = sp.basis(u);
                                Combination x = single(Tree2{a, b, c, e}) - single(Tree2{a, c, b, e}) + single(Tree2{a, e, b, c});
                                ++ihx;
                                if (!expand(ctx, x).is_zero() && ihx_bad++ == 0)
                                    r.witness["first_ihx_failure"] = describe(sp, Generator{Tree2{a, b, c, e}});
                            }
                r.witness["relations"] = str(checked);
                r.witness["relation_failures"] = str(bad);
                r.witness["ihx_colorings"] = str(ihx);
                r.witness["ihx_failures"] = str(ihx_bad);
                set(r, bad == 0 && ihx_bad == 0);
            } else if (id == "levine-counterexample") {
                auto ker = intersection(d.ker_projection(Lagrangian::A), t.ker_tr_as());
                std::size_t t1 = 0, t2 = 0, bad = 0;
                for (int i = 1; i <= g; ++i)
                    for (int j = 1; j <= g; ++j) {
                        if (i == j) continue;
                        IntVector c = d.coords(Generator{Tree2{sp.a(i), sp.b(j), sp.b(j), sp.b(i)}});
                        IntVector want(sym2_dim(g));
                        want[sym2_index(g, j - 1, j - 1)] = 1;
                        IntVector got = t.tr_A(c);
                        ++t1;
                        if (!ker.contains(c) || got != want) ++bad;
                        if (t1 == 1) {
                            r.vectors["T1_coords"] = to_strings(c);
                            r.vectors["T1_tr_A"] = to_strings(got);
                            r.witness["T1"] = describe(sp, Generator{Tree2{sp.a(i), sp.b(j), sp.b(j), sp.b(i)}});
                            r.witness["T1_tr_A"] = "b'" + std::to_string(j) + " b'" + std::to_string(j);
                        }
                        for (int k = 1; k <= g; ++k)
                            for (int k2 = k + 1; k2 <= g; ++k2) {
                                if (k == j || k2 == j) continue;
                                Combination c2 = single(Tree2{sp.a(k), sp.b(i), sp.b(j), sp.b(k)}) +
                                                 single(Tree2{sp.a(k2), sp.b(i), sp.b(j), sp.b(k2)});
                                IntVector w2(sym2_dim(g));
                                w2[sym2_index(g, i - 1, j - 1)] = 2;
                                ++t2;
                                if (t.tr_A(d.coords(c2)) != w2) ++bad;
                            }
                    }
                r.witness["T1_checked"] = str(t1);
                r.witness["T2_checked"] = str(t2);
                r.witness["failures"] = str(bad);
                set(r, bad == 0 && t1 > 0);
            } else if (id == "casson-bridge") {
                const auto& f0 = t.filtration0(Lagrangian::A);
                std::vector<std::pair<IntVector, IntVector>> f0_gens;  // coords, Tr^A
                for (const auto& v : f0.basis()) f0_gens.emplace_back(v, t.tr_A(v));
                for (const auto& gen : d.generators()) {
                    IntVector c = d.coords(gen);
                    if (f0.contains(c)) f0_gens.emplace_back(c, t.tr_A(c));
                }
                std::vector<DerivationElement> expanded;
                for (const auto& gen : d.generators()) expanded.push_back(expand(ctx, gen));
                std::size_t bad_r = 0, bad_q = 0;
                for (int trial = 0; trial < 100; ++trial) {
                    IntegerMatrix s = random_symmetric(g, rng);
                    for (const auto& [c, q] : f0_gens)
                        if (mu(d, c, s) != r_pairing(s, q) && bad_r++ == 0) r.vectors["r_pairing_failure"] = to_strings(c);
                    for (std::size_t k = 0; k < expanded.size(); ++k) {
                        mpq_class lhs = half_omegaS_plus_delta(sp, tr_omegaS(ctx, expanded[k], s), s);
                        if (lhs != mpq_class(mu(sp, d.generators()[k], s).to_mpz()) && bad_q++ == 0)
                            r.witness["contraction_failure"] = describe(sp, d.generators()[k]);
                    }
                }
                r.witness["f0_elements"] = str(f0_gens.size());
                r.witness["generators"] = str(expanded.size());
                r.witness["matrices"] = "100";
                r.witness["failures"] = str(bad_r + bad_q);
                set(r, bad_r == 0 && bad_q == 0);
            } else if (id == "qbar-lambda4") {
                const int n = sp.dim();
                std::size_t count = 0, bad = 0;
                auto wedge = [&](const HVector& a, const HVector& b, const HVector& c, const HVector& e) {
                    ++count;
                    mpq_class w = qbar(sp, Tree2{a, b, c, e}) - qbar(sp, Tree2{a, c, b, e}) + qbar(sp, Tree2{a, e, b, c});
                    if (w != 0 && bad++ == 0) r.witness["first_failure"] = describe(sp, Generator{Tree2{a, b, c, e}});
                };
                for (int p = 0; p < n; ++p)
                    for (int q = p + 1; q < n; ++q)
                        for (int s = q + 1; s < n; ++s)
                            for (int u = s + 1; u < n; ++u) wedge(sp.basis(p), sp.basis(q), sp.basis(s), sp.basis(u));
                r.witness["basis_wedges"] = str(count);
                for (int trial = 0; trial < 100; ++trial)
                    wedge(random_vector(n, rng), random_vector(n, rng), random_vector(n, rng), random_vector(n, rng));
                r.witness["failures"] = str(bad);
                set(r, bad == 0);
            } else if (id == "theorem-5.1") {
                Catalog c = realizable_catalog_A(d);
                r.witness["entries"] = str(c.entries.size());
                r.witness["partial"] = str(c.partial);
                lattice_report(r, catalog_lattice(d, c), t.ker_A_as(), g >= 4);
            } else if (id == "handlebody-sum") {
                auto rl = catalog_lattice(d, realizable_catalog_A(d));
                auto both = sum(rl, image(rl, d.action_matrix(sp.iota())));
                lattice_report(r, both, t.ker_tr_as(), g >= 4);
            } else if (id == "goeritz-tau2") {
                GoeritzCatalogs gc = goeritz_catalogs(d);
                r.witness["entries"] = str(gc.tau2.entries.size());
                lattice_report(r, catalog_lattice(d, gc.tau2), t.ker_A_B_as(), g >= 4);
            }
        }
    } catch (const std::exception& e) {
        r.status = Status::Fail;
        r.note = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace symp
