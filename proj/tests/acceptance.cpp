#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "gcyl/gray.hpp"
#include "gcyl/pr.hpp"
#include "gcyl/span.hpp"

using namespace gcyl;

namespace {

const std::vector<std::string> kSix = {"[1]", "[2]", "[3]", "[1]([1])", "[1]([2])", "[2]([1],[0])"};

bool globes() {
    for (int n = 0; n <= 5; ++n) {
        std::vector<std::size_t> want(static_cast<std::size_t>(n) + 1, 2);
        want.back() = 1;
        if (enumerate_cells(*lambda(globe(n)), n).nondegenerate() != want) return false;
    }
    return true;
}

bool strong_steiner() {
    for (const auto& t : all_cells(7)) {
        BasisReport b = check_basis(*lambda(t));
        if (!b.unital || !b.loop_free || !b.strongly_loop_free) return false;
        if (b.strongly_loop_free && !b.loop_free) return false;
    }
    return true;
}

bool gluing_globes() {
    for (int n = 0; n <= 4; ++n)
        if (!verify_gluing(globe(n)).pass) return false;
    return true;
}

bool main_theorem() {
    for (const auto& s : kSix) {
        Cell t = parse_cell(s);
        if (!verify_globular_preservation(t) || !verify_gluing(t).pass) return false;
    }
    return true;
}

bool pr_oracle() {
    for (const auto& s : kSix) {
        Cell t = parse_cell(s);
        auto tot = gray_cylinder(t, 4).totals();
        auto pr = pr_counts({t}, 4);
        for (std::size_t d = 0; d <= 4; ++d)
            if (static_cast<i64>(tot[d]) != pr[d]) return false;
    }
    return true;
}

bool hyperface_formulas() {
    for (const char* s : {"[2]", "[3]", "[1]([1])", "[2]([1],[0])"})
        for (const auto& h : hyperfaces(parse_cell(s)))
            if (!hyperface_cylinder(h.map).agree) return false;
    return true;
}

bool span() {
    for (int n = 0; n <= 4; ++n)
        if (!verify_span(simplex(n), dimension(simplex(n)) + 1).pass) return false;
    for (const char* s : {"[1]([1])", "[2]([1],[0])", "[1]([2])"}) {
        Cell t = parse_cell(s);
        SpanReport r = verify_span(t, dimension(t) + 1);
        if (!r.pass || !r.diamond) return false;
    }
    return true;
}

bool algebra() {
    std::vector<CPtr> ks;
    for (const auto& t : all_cells(7)) ks.push_back(lambda(t));
    for (const auto& t : all_cells(6)) ks.push_back(cylinder(t).cx);
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b)
            for (int c = 0; c <= 2; ++c) {
                CPtr A = lambda_globe(a), B = lambda_globe(b), C = lambda_globe(c);
                CPtr left = tensor(tensor(A, B).cx, C).cx, right = tensor(A, tensor(B, C).cx).cx;
                if (!find_isomorphism(*left, *right)) return false;
                ks.push_back(left);
            }
    for (const auto& k : ks) {
        for (int d = 2; d <= k->top(); ++d)
            for (int i = 0; i < k->size(d); ++i)
                if (!k->boundary(d - 1, k->diff(d, i)).empty()) return false;
        for (int i = 0; i < k->size(1); ++i)
            if (k->augment(k->diff(1, i)) != 0) return false;
    }
    Tensor cyl = cylinder(globe(2));
    CellSet s = enumerate_cells(*cyl.cx, 3);
    std::size_t instances = 0;
    for (int d = 2; d <= 3; ++d) {
        const auto& layer = s.by_dim[static_cast<std::size_t>(d)];
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) {
                std::map<NuCell, std::vector<const NuCell*>> src_i, src_j;
                for (const auto& x : layer) {
                    src_i[source_j(x, i)].push_back(&x);
                    src_j[source_j(x, j)].push_back(&x);
                }
                for (const auto& a : layer) {
                    auto bi = src_i.find(target_j(a, i));
                    auto cj = src_j.find(target_j(a, j));
                    if (bi == src_i.end() || cj == src_j.end()) continue;
                    for (const NuCell* b : bi->second)
                        for (const NuCell* c : cj->second) {
                            auto di = src_i.find(target_j(*c, i));
                            if (di == src_i.end()) continue;
                            for (const NuCell* e : di->second) {
                                if (!composable(j, *b, *e)) continue;
                                ++instances;
                                if (nu_compose(j, nu_compose(i, a, *b), nu_compose(i, *c, *e)) !=
                                    nu_compose(i, nu_compose(j, a, *c), nu_compose(j, *b, *e)))
                                    return false;
                            }
                        }
                }
            }
    }
    return instances > 0;
}

bool oracle_equivalence() {
    for (const char* s : {"[1]", "G<2>"}) {
        Tensor c = cylinder(parse_cell(s));
        if (!(table_search(*c.cx, 3, 3) == enumerate_cells(*c.cx, 3))) return false;
    }
    return true;
}

std::string run(const std::string& cmd) {
    std::array<char, 4096> buf;
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return "<failed to start>";
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    int rc = pclose(p);
    return out + "\nexit " + std::to_string(WIFEXITED(rc) ? WEXITSTATUS(rc) : -1);
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

bool determinism(const std::string& cli, const std::string& golden) {
    if (cli.empty()) return false;
    std::vector<std::string> cells = {"[0]"};
    cells.insert(cells.end(), kSix.begin(), kSix.end());
    for (const std::string sub : {"counts", "verify gray", "emit"})
        for (const auto& c : cells) {
            std::string cmd = "'" + cli + "' " + sub + " '" + c + "' 2>&1";
            std::string first = run(cmd);
            for (int r = 1; r < 3; ++r)
                if (run(cmd) != first) return false;
            if (!golden.empty()) {
                std::string name = sub + " " + c;
                for (char& ch : name)
                    if (!std::isalnum(static_cast<unsigned char>(ch))) ch = '_';
                if (slurp(golden + "/" + name + ".txt") != first) return false;
            }
        }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli = argc > 1 ? argv[1] : "";
    std::string golden = argc > 2 ? argv[2] : "";
    std::vector<std::pair<std::string, std::function<bool()>>> criteria = {
        {"globe fidelity", globes},
        {"strong Steiner corpus", strong_steiner},
        {"gluing for globes", gluing_globes},
        {"cylinder theorem at desk scale", main_theorem},
        {"P.R. cross-oracle", pr_oracle},
        {"hyperface formulas", hyperface_formulas},
        {"span verification", span},
        {"algebraic invariants", algebra},
        {"table search equals closure", oracle_equivalence},
        {"CLI determinism", [&] { return determinism(cli, golden); }},
    };
    bool all = true;
    int i = 0;
    for (const auto& [name, f] : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = f();
        } catch (const std::exception& e) {
            std::cout << "  exception: " << e.what() << "\n";
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s %2d %s (%.2fs)\n", ok ? "PASS" : "FAIL", ++i, name.c_str(), s);
        all = all && ok;
    }
    return all ? 0 : 1;
}
