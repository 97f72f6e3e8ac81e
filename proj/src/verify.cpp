#include "varkit/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "varkit/ample.hpp"
#include "varkit/catalog.hpp"
#include "varkit/cohomology.hpp"
#include "varkit/geometry.hpp"
#include "varkit/hodge.hpp"
#include "varkit/ktheory.hpp"
#include "varkit/picard.hpp"

namespace varkit {

namespace {

/// Collects the failures of one check.
class Sub {
public:
    void expect(bool cond, const std::string& what) {
        if (!cond)
            failures_.push_back(what);
    }

    template <typename T>
    void expect_eq(const T& got, const T& want, const std::string& what) {
        if (!(got == want))
            failures_.push_back(what);
    }

    bool ok() const { return failures_.empty(); }

    std::string detail(const std::string& success) const {
        if (failures_.empty())
            return success;
        std::string out;
        for (const auto& f : failures_) {
            if (!out.empty())
                out += "; ";
            out += f;
        }
        return out;
    }

private:
    std::vector<std::string> failures_;
};

class Runner {
public:
    explicit Runner(const VerificationOptions& opts) : opts_(opts) {}

    std::vector<CheckResult> run() {
        if (want("theorem1")) {
            theorem1_hodge();
            theorem1_adjunction();
            theorem1_fano();
            theorem1_k0();
            theorem1_sod();
        }
        if (want("lemma")) {
            lemma_canonical_routes();
            lemma_canonical_chain();
            lemma_koszul();
            lemma_disjointness();
            lemma_genericity_sweep();
            lemma_degenerate_sections();
        }
        if (want("theorem2")) {
            theorem2_hodge();
            theorem2_canonical();
            theorem2_fano();
            theorem2_k0();
            theorem2_sod();
        }
        if (want("properties")) {
            property_hodge_closure();
            property_snf();
            property_bott_duality();
            property_conic_coordinate_change();
        }
        return std::move(results_);
    }

private:
    bool want(const std::string& group) const { return opts_.only.empty() || opts_.only == group; }

    void add(int criterion, const std::string& id, const Sub& sub, const std::string& success) {
        results_.push_back({criterion, id, sub.ok(), sub.detail(success)});
    }

    static bool trace_contains(const std::vector<std::string>& trace, const std::string& needle) {
        return std::any_of(trace.begin(), trace.end(), [&](const std::string& t) {
            return t.find(needle) != std::string::npos;
        });
    }

    // ---- the Reye fourfold ------------------------------------------------

    void theorem1_hodge() {
        Sub sub;
        auto M = catalog::reye_fourfold();
        HodgeDiamond got = hodge(*M);
        sub.expect_eq(got, HodgeDiamond::diagonal({1, 2, 12, 2, 1}),
                      "diamond differs from diag(1,2,12,2,1)");
        sub.expect(is_diagonal(got), "diamond has a nonzero off-diagonal entry");
        add(1, "t1.hodge", sub, "hodge(M) = diag(1,2,12,2,1), all off-diagonal zero");
    }

    void theorem1_adjunction() {
        Sub sub;
        auto M = catalog::reye_fourfold();
        const auto& zl_model = M->as_identified().models[1];
        DivisorClass anti = -canonical(*zl_model);
        sub.expect_eq(anti.render(), std::string("s1 + H'"),
                      "anticanonical is " + anti.render() + ", expected s1 + H'");
        add(5, "t1.adjunction", sub, "-K(M) = s1 + H' restricted from Gr(2,4) x P^3");
    }

    void theorem1_fano() {
        Sub sub;
        auto M = catalog::reye_fourfold();
        FanoVerdict verdict = is_fano(*M);
        sub.expect(verdict.fano, "verdict is " + verdict.render());
        sub.expect(!verdict.trace.empty(), "certificate trace is empty");
        add(5, "t1.fano", sub, "M certified Fano with a non-empty certificate trace");
    }

    void theorem1_k0() {
        Sub sub;
        auto M = catalog::reye_fourfold();
        FgAbGroup group = k0(*M);
        sub.expect_eq(group.render(), std::string("Z^18 (+) Z/2"),
                      "K0 is " + group.render() + ", expected Z^18 (+) Z/2");
        sub.expect_eq(fec_obstruction(group).label(), std::string("Obstructed(2)"),
                      "obstruction verdict is " + fec_obstruction(group).label());
        sub.expect_eq(group.rank(), hodge(*M).total(),
                      "rank(K0) differs from the diamond total");
        add(7, "t1.k0", sub, "K0(M) = Z^18 (+) Z/2, Obstructed(2), rank matches diamond total");
    }

    void theorem1_sod() {
        Sub sub;
        auto M = catalog::reye_fourfold();
        SodSummary s = sod(*M);
        sub.expect_eq(sod_exceptional_total(s), std::size_t{6},
                      "exceptional total is " + std::to_string(sod_exceptional_total(s)));
        std::size_t enriques_copies = 0;
        for (const auto& c : s)
            if (c.atom && c.atom->as_atomic().name == "enriques")
                enriques_copies += c.count;
        sub.expect_eq(enriques_copies, std::size_t{1}, "expected exactly one Enriques component");
        add(10, "t1.sod", sub, "sod(M) = 6 exceptional objects plus one Enriques component");
    }

    // ---- the double cover of the join resolution --------------------------

    void lemma_canonical_routes() {
        Sub sub;
        auto jt = catalog::join_double_cover();
        DivisorClass route_a = canonical(*jt);  // bundle formula
        {
            auto lat = jt->lattice();
            DivisorClass expected(lat, {Integer(-2), Integer(-2), Integer(-2)});
            sub.expect_eq(route_a, expected,
                          "bundle-formula canonical is " + route_a.render());
        }
        // Independent route: blow up P^5 along the two disjoint planes and
        // rewrite the exceptional divisors in the bundle coordinates.
        auto p5 = VarietyExpr::projective_space(5, "p");
        DivisorClass k_p5 = canonical(*p5);
        DivisorClass step1 = canonical_blowup(k_p5, 3, "E1");
        DivisorClass route_b = canonical_blowup(step1, 3, "E2");
        {
            sub.expect_eq(route_b.render(), std::string("-6p + 2E1 + 2E2"),
                          "blowup canonical is " + route_b.render());
            auto lat = jt->lattice();
            DivisorClass Ht = DivisorClass::generator(lat, "H~");
            DivisorClass Ht1 = DivisorClass::generator(lat, "H~1");
            DivisorClass Ht2 = DivisorClass::generator(lat, "H~2");
            DivisorClass rewritten = substitute(
                route_b, {{"p", Ht}, {"E1", Ht - Ht2}, {"E2", Ht - Ht1}});
            sub.expect_eq(rewritten, route_a,
                          "the two canonical-class derivations disagree: " +
                              rewritten.render() + " vs " + route_a.render());
        }
        // The diamonds of the two models agree as well.
        HodgeDiamond bundle_diamond = hodge(*jt);
        auto plane = VarietyExpr::projective_space(2, "a");
        auto bl1 = VarietyExpr::blow_up(p5, plane, 3, "E1");
        auto bl2 = VarietyExpr::blow_up(bl1, plane, 3, "E2");
        sub.expect_eq(hodge(*bl2), bundle_diamond, "blowup-model diamond differs");
        add(4, "lem.routes", sub,
            "bundle and blowup derivations both give K = -2H~1 - 2H~2 - 2H~");
    }

    void lemma_canonical_chain() {
        Sub sub;
        auto st = catalog::k3_cover_surface();
        DivisorClass K = canonical(*st);
        {
            auto lat = st->lattice();
            DivisorClass expected(lat, {Integer(-2), Integer(-2), Integer(4)});
            sub.expect_eq(K, expected, "K of the cover surface is " + K.render() +
                                           ", expected 4H~ - 2H~1 - 2H~2");
        }
        // Rewrite in exceptional-divisor coordinates via the inverted
        // relations E1 = H~ - H~2, E2 = H~ - H~1.
        auto target = PicardLattice::create(
            {{"H~", GenKind::RelativeClass}, {"E1", GenKind::Exceptional},
             {"E2", GenKind::Exceptional}});
        DivisorClass Ht = DivisorClass::generator(target, "H~");
        DivisorClass E1 = DivisorClass::generator(target, "E1");
        DivisorClass E2 = DivisorClass::generator(target, "E2");
        DivisorClass rewritten =
            substitute(K, {{"H~", Ht}, {"H~1", Ht - E2}, {"H~2", Ht - E1}});
        sub.expect_eq(rewritten, E1 * Integer(2) + E2 * Integer(2),
                      "rewritten K is " + rewritten.render() + ", expected 2E1 + 2E2");
        add(4, "lem.chain", sub, "K = 4H~ - 2H~1 - 2H~2 = 2E1 + 2E2 under the relations");
    }

    void lemma_koszul() {
        Sub sub;
        auto jt = catalog::join_double_cover();
        FormalBundle F = catalog::k3_cutting_bundle();

        // Frozen term-by-term chain backing the hypercohomology value.
        auto lat = jt->lattice();
        DivisorClass Ht = DivisorClass::generator(lat, "H~");
        CohomologyVector zero6(6, Integer(0));
        sub.expect_eq(line_bundle_cohomology(*jt, Ht * Integer(-2)), zero6,
                      "O(-2H~) has unexpected cohomology");
        sub.expect_eq(line_bundle_cohomology(*jt, Ht * Integer(-4)), zero6,
                      "O(-4H~) has unexpected cohomology");
        CohomologyVector top(6, Integer(0));
        top[5] = 1;
        sub.expect_eq(line_bundle_cohomology(*jt, Ht * Integer(-6)), top,
                      "O(-6H~) is not concentrated in h^5 = 1");
        {
            // Pushforward of O(-6H~): Sym^4 E (x) det E, shifted by one.
            const auto& E = jt->as_proj_bundle().bundle;
            auto base_lat = E.c1().lattice();
            PushforwardResult push =
                pushforward_proj_bundle(Integer(-6), E, DivisorClass::zero(base_lat));
            sub.expect_eq(push.degree_shift, std::size_t{1}, "pushforward shift is not 1");
            std::vector<std::vector<Integer>> got;
            for (const auto& s : push.bundle.summands())
                got.push_back(s.coeffs());
            std::sort(got.begin(), got.end());
            std::vector<std::vector<Integer>> want = {{-5, -1}, {-4, -2}, {-3, -3},
                                                      {-2, -4}, {-1, -5}};
            std::sort(want.begin(), want.end());
            sub.expect(got == want, "pushforward summands of O(-6H~) differ");
            CohomologyVector mid = kunneth({{2, Integer(-3)}, {2, Integer(-3)}});
            sub.expect(mid.size() == 5 && mid[4] == 1 &&
                           euler_characteristic(mid) == 1,
                       "kunneth of O(-3,-3) is not h^4 = 1");
        }

        try {
            KoszulResult k = koszul_structure_cohomology(*jt, F);
            sub.expect_eq(k.h, CohomologyVector{Integer(1), Integer(0), Integer(1)},
                          "h(O) of the cover surface differs from (1, 0, 1)");
        } catch (const std::domain_error& e) {
            sub.expect(false, std::string("degeneration precondition failed: ") + e.what());
        }
        sub.expect_eq(euler_characteristic_koszul(*jt, F), Integer(2),
                      "chi(O) of the cover surface is not 2");
        add(6, "lem.koszul", sub,
            "h(O) = (1, 0, 1), chi = 2, degeneration precondition satisfied");
    }

    void lemma_disjointness() {
        Sub sub;
        SectionPhi phi = opts_.phi_override ? *opts_.phi_override : random_section(opts_.seed);
        auto [first, second] = check_disjoint_from_exceptional(phi);
        sub.expect(first, "the section meets the first exceptional divisor (block 1 not "
                          "certified empty)");
        sub.expect(second, "the section meets the second exceptional divisor (block 2 not "
                           "certified empty)");
        std::string source = opts_.phi_override
                                 ? "injected section"
                                 : "seed " + std::to_string(opts_.seed);
        add(8, "lem.disjoint", sub, "section (" + source + ") avoids both exceptional divisors");
    }

    void lemma_genericity_sweep() {
        Sub sub;
        std::size_t good = 0;
        std::vector<std::uint64_t> bad;
        for (std::uint64_t s = 1; s <= 100; ++s) {
            auto [a, b] = check_disjoint_from_exceptional(random_section(s));
            if (a && b)
                ++good;
            else
                bad.push_back(s);
        }
        std::ostringstream note;
        note << good << "/100 seeds certified disjoint";
        if (!bad.empty()) {
            note << " (failing seeds:";
            for (auto s : bad)
                note << ' ' << s;
            note << ")";
        }
        sub.expect(good >= 99, note.str());
        add(8, "lem.genericity", sub, note.str());
    }

    void lemma_degenerate_sections() {
        Sub sub;
        auto [a1, b1] = check_disjoint_from_exceptional(degenerate_phi_block1());
        sub.expect(!a1, "block-1 degenerate section was certified disjoint");
        sub.expect(b1, "block 2 of the first degenerate section should be fine");
        auto [a2, b2] = check_disjoint_from_exceptional(degenerate_phi_block2());
        sub.expect(a2, "block 1 of the second degenerate section should be fine");
        sub.expect(!b2, "zero-block section was certified disjoint");
        add(8, "lem.degenerate", sub,
            "both constructed degenerate sections fail in the expected slot");
    }

    // ---- the Enriques sixfold ----------------------------------------------

    void theorem2_hodge() {
        Sub sub;
        auto X = catalog::enriques_sixfold();
        sub.expect_eq(hodge(*X), HodgeDiamond::diagonal({1, 4, 9, 20, 9, 4, 1}),
                      "diamond differs from diag(1,4,9,20,9,4,1)");
        sub.expect(is_diagonal(hodge(*X)), "diamond has a nonzero off-diagonal entry");
        HodgeDiamond intermediate =
            diamond_product(hodge(*catalog::join_resolution()), HodgeDiamond::projective_space(1));
        sub.expect_eq(intermediate, HodgeDiamond::diagonal({1, 4, 8, 10, 8, 4, 1}),
                      "J x P^1 summand differs from diag(1,4,8,10,8,4,1)");
        add(2, "t2.hodge", sub,
            "hodge(X) = diag(1,4,9,20,9,4,1); J x P^1 summand = diag(1,4,8,10,8,4,1)");
    }

    void theorem2_canonical() {
        Sub sub;
        auto X = catalog::enriques_sixfold();
        DivisorClass K = canonical(*X);
        DivisorClass expected(X->lattice(),
                              {Integer(-1), Integer(-1), Integer(-1), Integer(-2)});
        sub.expect_eq(K, expected, "K(X) is " + K.render());
        sub.expect_eq(K.render(), std::string("-H1 - H2 - H - 2H'"),
                      "K(X) renders as '" + K.render() + "'");
        add(3, "t2.canonical", sub, "K(X) = -H1 - H2 - H - 2H'");
    }

    void theorem2_fano() {
        Sub sub;
        auto X = catalog::enriques_sixfold();
        FanoVerdict verdict = is_fano(*X);
        sub.expect(verdict.fano, "verdict is " + verdict.render());
        sub.expect(!verdict.trace.empty(), "certificate trace is empty");
        sub.expect(trace_contains(verdict.trace, "O(3,1)"),
                   "trace lacks the pushforward summand O(3,1)");
        sub.expect(trace_contains(verdict.trace, "O(1,3)"),
                   "trace lacks the pushforward summand O(1,3)");
        add(5, "t2.fano", sub,
            "X certified Fano; trace shows pushforward summands O(3,1) and O(1,3)");
    }

    void theorem2_k0() {
        Sub sub;
        auto X = catalog::enriques_sixfold();
        FgAbGroup group = k0(*X);
        sub.expect_eq(group.render(), std::string("Z^48 (+) Z/2"),
                      "K0 is " + group.render() + ", expected Z^48 (+) Z/2");
        sub.expect_eq(fec_obstruction(group).label(), std::string("Obstructed(2)"),
                      "obstruction verdict is " + fec_obstruction(group).label());
        sub.expect_eq(group.rank(), hodge(*X).total(),
                      "rank(K0) differs from the diamond total");
        add(7, "t2.k0", sub, "K0(X) = Z^48 (+) Z/2, Obstructed(2), rank matches diamond total");
    }

    void theorem2_sod() {
        Sub sub;
        auto X = catalog::enriques_sixfold();
        SodSummary s = sod(*X);
        sub.expect_eq(sod_exceptional_total(s), std::size_t{36},
                      "exceptional total is " + std::to_string(sod_exceptional_total(s)));
        std::vector<std::size_t> blocks;
        std::size_t enriques_copies = 0;
        for (const auto& c : s) {
            if (c.atom)
                enriques_copies += c.atom->as_atomic().name == "enriques" ? c.count : 0;
            else
                blocks.push_back(c.count);
        }
        sub.expect(blocks == std::vector<std::size_t>{18, 18},
                   "the 36 exceptionals do not decompose as 2 x 18");
        sub.expect_eq(enriques_copies, std::size_t{1}, "expected exactly one Enriques component");
        add(10, "t2.sod", sub,
            "sod(X) = two blocks of 18 exceptional objects plus one Enriques component");
    }

    // ---- property suites ----------------------------------------------------

    static bool symmetric(const HodgeDiamond& d) {
        for (std::size_t p = 0; p <= d.dim(); ++p)
            for (std::size_t q = 0; q <= d.dim(); ++q)
                if (d.h(p, q) != d.h(q, p))
                    return false;
        return true;
    }

    static bool serre_dual(const HodgeDiamond& d) {
        for (std::size_t p = 0; p <= d.dim(); ++p)
            for (std::size_t q = 0; q <= d.dim(); ++q)
                if (d.h(p, q) != d.h(d.dim() - p, d.dim() - q))
                    return false;
        return true;
    }

    HodgeDiamond random_variety_diamond(DeterministicRng& rng, std::size_t dim) {
        HodgeDiamond d(dim, true);
        for (std::size_t p = 0; p <= dim; ++p)
            for (std::size_t q = p; q <= dim; ++q) {
                if (d.h(p, q) != 0)
                    continue;
                Integer v(rng.next_in(0, 9));
                // fill the full symmetry/duality orbit of (p,q)
                d.set_h(p, q, v);
                d.set_h(q, p, v);
                d.set_h(dim - p, dim - q, v);
                d.set_h(dim - q, dim - p, v);
            }
        d.set_h(0, 0, 1);
        d.set_h(dim, dim, 1);
        return d;
    }

    void property_hodge_closure() {
        Sub sub;
        DeterministicRng rng(opts_.seed ^ 0xa5a5a5a5ull);
        for (int trial = 0; trial < 200 && sub.ok(); ++trial) {
            const int op = static_cast<int>(rng.next_in(0, 5));
            const std::string tag = "trial " + std::to_string(trial);
            switch (op) {
                case 0: {
                    std::size_t dim = static_cast<std::size_t>(rng.next_in(0, 4));
                    HodgeDiamond a = random_variety_diamond(rng, dim);
                    HodgeDiamond b = random_variety_diamond(rng, dim);
                    HodgeDiamond s = diamond_sum(a, b);
                    sub.expect(symmetric(s) && serre_dual(s), tag + ": sum closure");
                    break;
                }
                case 1: {
                    HodgeDiamond a =
                        random_variety_diamond(rng, static_cast<std::size_t>(rng.next_in(0, 3)));
                    HodgeDiamond b =
                        random_variety_diamond(rng, static_cast<std::size_t>(rng.next_in(0, 3)));
                    HodgeDiamond p = diamond_product(a, b);
                    p.validate();  // symmetry, Serre, h00 = 1
                    sub.expect(symmetric(p) && serre_dual(p), tag + ": product closure");
                    break;
                }
                case 2: {
                    HodgeDiamond base =
                        random_variety_diamond(rng, static_cast<std::size_t>(rng.next_in(0, 3)));
                    std::size_t r = static_cast<std::size_t>(rng.next_in(1, 3));
                    HodgeDiamond p = projective_bundle_diamond(base, r);
                    sub.expect(symmetric(p) && serre_dual(p), tag + ": bundle closure");
                    break;
                }
                case 3: {
                    std::size_t cdim = static_cast<std::size_t>(rng.next_in(0, 2));
                    std::size_t codim = static_cast<std::size_t>(rng.next_in(2, 3));
                    HodgeDiamond center = random_variety_diamond(rng, cdim);
                    HodgeDiamond ambient = random_variety_diamond(rng, cdim + codim);
                    HodgeDiamond b = blowup_diamond(ambient, center, codim);
                    sub.expect(symmetric(b) && serre_dual(b), tag + ": blowup closure");
                    Integer expected_e = ambient.euler_characteristic() +
                                         Integer(static_cast<long>(codim - 1)) *
                                             center.euler_characteristic();
                    sub.expect(b.euler_characteristic() == expected_e,
                               tag + ": blowup Euler bookkeeping");
                    break;
                }
                case 4: {
                    std::size_t bdim = static_cast<std::size_t>(rng.next_in(3, 4));
                    HodgeDiamond base = random_variety_diamond(rng, bdim);
                    HodgeDiamond jump = random_variety_diamond(rng, bdim - 3);
                    HodgeDiamond u = universal_divisor_diamond(base, 2, jump);
                    sub.expect(symmetric(u) && serre_dual(u), tag + ": universal closure");
                    break;
                }
                case 5: {
                    std::size_t dim = static_cast<std::size_t>(rng.next_in(0, 3));
                    HodgeDiamond a = random_variety_diamond(rng, dim);
                    std::size_t target = dim + static_cast<std::size_t>(rng.next_in(0, 2));
                    std::size_t k = static_cast<std::size_t>(rng.next_in(0, (long)(target - dim)));
                    HodgeDiamond s = diamond_shift(a, k, target);
                    sub.expect(symmetric(s), tag + ": shift keeps symmetry");
                    break;
                }
            }
        }
        add(9, "prop.hodge", sub, "200 randomized closure cases (symmetry + Serre duality)");
    }

    IntMatrix random_matrix(DeterministicRng& rng, std::size_t rows, std::size_t cols, long lo,
                            long hi) {
        IntMatrix m(rows, std::vector<Integer>(cols));
        for (auto& row : m)
            for (auto& x : row)
                x = Integer(rng.next_in(lo, hi));
        return m;
    }

    IntMatrix random_unimodular(DeterministicRng& rng, std::size_t n) {
        IntMatrix m = identity_matrix(n);
        for (int step = 0; step < 8; ++step) {
            std::size_t i = static_cast<std::size_t>(rng.next_in(0, (long)n - 1));
            std::size_t j = static_cast<std::size_t>(rng.next_in(0, (long)n - 1));
            if (i == j)
                continue;
            Integer q(rng.next_in(-3, 3));
            for (std::size_t c = 0; c < n; ++c)
                m[i][c] += q * m[j][c];
        }
        return m;
    }

    void property_snf() {
        Sub sub;
        DeterministicRng rng(opts_.seed ^ 0x5eed5eedull);
        for (int trial = 0; trial < 200 && sub.ok(); ++trial) {
            const std::string tag = "trial " + std::to_string(trial);
            std::size_t rows = static_cast<std::size_t>(rng.next_in(1, 6));
            std::size_t cols = static_cast<std::size_t>(rng.next_in(1, 6));
            IntMatrix m = random_matrix(rng, rows, cols, -20, 20);
            SmithNormalForm snf = smith_normal_form(m);
            sub.expect(verify_certificate(m, snf), tag + ": certificate does not verify");
            auto factors = snf.invariant_factors();
            sub.expect(std::is_sorted(factors.begin(), factors.end()),
                       tag + ": factors not sorted");
            for (std::size_t i = 0; i + 1 < factors.size(); ++i)
                sub.expect(factors[i + 1] % factors[i] == 0, tag + ": divisibility chain broken");
            IntMatrix mixed = matrix_product(random_unimodular(rng, rows),
                                             matrix_product(m, random_unimodular(rng, cols)));
            sub.expect(smith_normal_form(mixed).invariant_factors() == factors,
                       tag + ": invariant factors changed under unimodular mixing");
        }
        add(9, "prop.snf", sub,
            "200 random matrices: certificates verify, factors unimodular-invariant");
    }

    void property_bott_duality() {
        Sub sub;
        for (std::size_t n = 1; n <= 4 && sub.ok(); ++n)
            for (long d = -20; d <= 20; ++d) {
                CohomologyVector a = bott_pn(n, Integer(d));
                CohomologyVector b = bott_pn(n, Integer(-d) - Integer((long)n) - 1);
                std::size_t nonzero = 0;
                for (std::size_t q = 0; q <= n; ++q) {
                    if (a[q] != 0)
                        ++nonzero;
                    sub.expect(a[q] == b[n - q], "duality fails at n=" + std::to_string(n) +
                                                     " d=" + std::to_string(d) +
                                                     " q=" + std::to_string(q));
                }
                sub.expect(nonzero <= 1, "vanishing fails at n=" + std::to_string(n) +
                                             " d=" + std::to_string(d));
            }
        add(9, "prop.bott", sub, "Serre duality and one-degree vanishing for n <= 4, |d| <= 20");
    }

    void property_conic_coordinate_change() {
        Sub sub;
        DeterministicRng rng(opts_.seed ^ 0xc0111c5ull);
        for (int trial = 0; trial < 50 && sub.ok(); ++trial) {
            const std::string tag = "trial " + std::to_string(trial);
            SectionPhi phi = random_section(rng.next_u64() | 1);
            auto qs = phi.block(0);
            // invertible rational change of coordinates
            std::array<std::array<Rational, 3>, 3> A;
            while (true) {
                IntMatrix m = random_matrix(rng, 3, 3, -5, 5);
                if (determinant(m) == 0)
                    continue;
                for (std::size_t i = 0; i < 3; ++i)
                    for (std::size_t j = 0; j < 3; ++j)
                        A[i][j] = Rational(m[i][j]);
                break;
            }
            bool before = conics_common_zero_empty(qs[0], qs[1], qs[2]);
            bool after = conics_common_zero_empty(conic_linear_substitution(qs[0], A),
                                                  conic_linear_substitution(qs[1], A),
                                                  conic_linear_substitution(qs[2], A));
            sub.expect(before == after, tag + ": verdict changed under a coordinate change");
        }
        add(9, "prop.conics", sub, "50 random coordinate changes leave the verdict unchanged");
    }

    const VerificationOptions& opts_;
    std::vector<CheckResult> results_;
};

}  // namespace

std::vector<CheckResult> run_verification(const VerificationOptions& opts) {
    return Runner(opts).run();
}

}  // namespace varkit
