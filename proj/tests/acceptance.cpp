#include "symp/checks.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <set>
#include <sstream>

using namespace symp;

namespace {

struct Part {
    std::string id;
    int genus;
    Status want = Status::Pass;
    double max_seconds = 0;  // 0: no limit
};

struct Criterion {
    int number;
    std::string text;
    std::vector<Part> parts;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    std::vector<int> known_red;
    std::uint64_t seed = 0;
    app.add_option("--known-red", known_red, "criteria expected to fail");
    app.add_option("--seed", seed, "seed for randomized checks");
    CLI11_PARSE(app, argc, argv);

    const std::vector<Criterion> criteria = {
        {1, "rank D2(H) = 20/105/336 by bracket kernel and relation count",
         {{"d2-rank", 2, Status::Pass, 1}, {"d2-rank", 3, Status::Pass, 30}, {"d2-rank", 4, Status::Pass, 1200}}},
        {2, "[D2 : D'2] = 2^C(2g,2), g = 2,3", {{"dprime2-index", 2}, {"dprime2-index", 3}}},
        {3, "Tr^as, Tr^sym onto with cokernels (g-1)(2g+1), (g+1)(2g-1), g = 2..4",
         {{"trace-cokernels", 2}, {"trace-cokernels", 3}, {"trace-cokernels", 4}}},
        {4, "Ker Tr^as = Johnson lattice and Ker Tr^sym ∩ D'2 = [η1D1, η1D1], g = 2,3",
         {{"johnson-kernel", 2, Status::Pass, 300},
          {"johnson-kernel", 3, Status::Pass, 300},
          {"bracket-kernel", 2, Status::Pass, 300},
          {"bracket-kernel", 3, Status::Pass, 300}}},
        {5, "[Ker Tr^as : Ker Tr^sym] = 2^(2g + C(2g,2)), g = 2,3", {{"kernel-index", 2}, {"kernel-index", 3}}},
        {6, "traces vanish on 1000 random relation vectors; η2(IHX) = 0 on basis colorings",
         {{"well-defined", 2}, {"well-defined", 3}}},
        {7, "T1 in Ker(D2 -> D2(H')) ∩ Ker Tr^as, Tr^A(T1) = b'_j b'_j, Tr^A(T2) = 2 b'_i b'_j, g = 2..4",
         {{"levine-counterexample", 2}, {"levine-counterexample", 3}, {"levine-counterexample", 4}}},
        {8, "μ = r(S, Tr^A) on F0 and μ = (½ω_S + ω_δ)∘Tr^{ω_S}, 100 random S, g = 2,3",
         {{"casson-bridge", 2}, {"casson-bridge", 3}}},
        {9, "q̄ vanishes on Λ4H, g = 2,3", {{"qbar-lambda4", 2}, {"qbar-lambda4", 3}}},
        {10, "R_4 = Ker Tr^A ∩ Ker Tr^as; inclusion observed at g = 2,3",
         {{"theorem-5.1", 4, Status::Pass, 1800}, {"theorem-5.1", 2, Status::Observed}, {"theorem-5.1", 3, Status::Observed}}},
        {11, "Ker Tr^as = R_4 + ι(R_4)", {{"handlebody-sum", 4}}},
        {12, "orbit of tree(a1,b1,b2) = A∧B∧H, rank C(2g,3) - 2C(g,3), g = 2,3", {{"goeritz-tau1", 2}, {"goeritz-tau1", 3}}},
        {13, "Goeritz lattice = Ker Tr^as ∩ Ker Tr^A ∩ Ker Tr^B at g = 4", {{"goeritz-tau2", 4, Status::Pass, 1800}}},
        {14, "d_core(1) = 0, d_core(2) = 8", {{"d-core", 2}}},
    };

    CheckRunner runner(seed);
    std::set<int> red;
    for (const auto& c : criteria) {
        bool ok = true;
        std::ostringstream detail;
        for (const auto& p : c.parts) {
            auto start = std::chrono::steady_clock::now();
            CheckReport r = runner.run(p.id, p.genus);  // includes context construction on first use
            double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            bool part_ok = r.status == p.want && (p.max_seconds == 0 || secs < p.max_seconds);
            ok = ok && part_ok;
            detail << " " << p.id << "@g" << p.genus << "=" << to_string(r.status);
            if (!part_ok) {
                for (const auto& [k, v] : r.witness) detail << " " << k << "=" << v;
                if (!r.note.empty()) detail << " (" << r.note << ")";
            }
        }
        if (!ok) red.insert(c.number);
        std::printf("%s criterion %d: %s |%s\n", ok ? "PASS" : "FAIL", c.number, c.text.c_str(), detail.str().c_str());
        std::fflush(stdout);
    }

    std::set<int> expected(known_red.begin(), known_red.end());
    if (red != expected) {
        std::printf("failing criteria differ from --known-red\n");
        return 1;
    }
    if (!red.empty()) std::printf("%zu criterion(s) red as declared by --known-red\n", red.size());
    return 0;
}
