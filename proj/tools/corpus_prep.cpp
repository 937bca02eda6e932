// Maintenance helper for the bundled corpus: converts braid words to frozen
// PD codes, reprints the invariants used to sanity-check new entries, and
// searches for braid presentations matching ingested Kauffman data.

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "vknots/vknots.hpp"

using namespace vknots;

namespace {

HalfGridLaurent dubrovnik_as_bracket(const TwoVarLaurent& f) {
    HalfGridLaurent a_sub = HalfGridLaurent::monomial(6, Rational(-1));  // -A^3
    HalfGridLaurent z_sub =
        HalfGridLaurent::monomial(2) + HalfGridLaurent::monomial(-2, Rational(-1));
    return substitute_two_var(f, a_sub, z_sub);
}

HalfGridLaurent normalized_bracket(const PDCode& pd) {
    int w = writhe(pd);
    HalfGridLaurent norm = HalfGridLaurent::monomial(-6 * w, Rational(w % 2 == 0 ? 1 : -1));
    return kauffman_bracket(pd) * norm;
}

void describe(const BraidWord& b) {
    ClosedBraidDiagram d = braid_to_pd(b);
    std::cout << "braid:      " << serialize_braid(b) << "\n";
    std::cout << "pd:         " << serialize_pd(d.pd) << "\n";
    std::cout << "free loops: " << d.free_loops << "\n";
    std::cout << "components: " << components(b) << "\n";
    std::cout << "writhe:     " << writhe(d.pd) << "\n";
    JonesPolynomial j = jones(b);
    std::cout << "jones:      " << j.poly.str() << "\n";
    if (components(b) == 1 && !d.pd.empty())
        std::cout << "det:        " << coloring_minor_determinant(d.pd).get_str() << "\n";
    std::cout << "\n";
}

/// Finds braids whose closure realizes the candidate Dubrovnik polynomial
/// up to the a^{even} normalization ambiguity, and prints the corrected,
/// exactly-normalized Kauffman data.
int search(const std::string& candidate_path, long target_det, int strands, int max_len) {
    std::ifstream in(candidate_path);
    nlohmann::json doc = nlohmann::json::parse(in);
    TwoVarLaurent candidate = TwoVarLaurent::from_json(doc);
    HalfGridLaurent p0 = dubrovnik_as_bracket(candidate);

    std::vector<int> letters;
    for (int g = 1; g < strands; ++g) {
        letters.push_back(g);
        letters.push_back(-g);
    }
    int found = 0;
    std::vector<int> word;
    auto matches = [&](const PDCode& pd) -> bool {
        HalfGridLaurent n = normalized_bracket(pd);
        if (n.term_count() != p0.term_count() || n.is_zero()) return false;
        int shift = n.min_h() - p0.min_h();
        if (shift % 6 != 0) return false;
        int delta = shift / 6;  // F_true = a^delta * candidate
        Rational sign(delta % 2 == 0 ? 1 : -1);
        HalfGridLaurent shifted = p0.shifted(shift).scaled(sign);
        if (!(shifted == n)) return false;
        TwoVarLaurent f_true;
        for (const auto& [k, c] : candidate.terms())
            f_true = f_true + TwoVarLaurent::monomial(k.first + delta, k.second, c);
        std::cout << "MATCH braid " << serialize_braid({strands, word}) << "  delta " << delta
                  << "\n";
        std::cout << "  F: " << f_true.to_json().dump() << "\n";
        ClosedBraidDiagram d = braid_to_pd({strands, word});
        std::cout << "  pd: " << serialize_pd(d.pd) << "\n";
        std::cout << "  writhe: " << writhe(d.pd) << "\n";
        return true;
    };

    std::function<void(int)> rec = [&](int remaining) {
        if (found >= 3) return;
        if (!word.empty()) {
            BraidWord b{strands, word};
            if (components(b) == 1) {
                ClosedBraidDiagram d = braid_to_pd(b);
                bool all_touched = d.free_loops == 0;
                if (all_touched && !d.pd.empty() &&
                    coloring_minor_determinant(d.pd) == Integer(target_det)) {
                    if (matches(d.pd)) ++found;
                }
            }
        }
        if (remaining == 0 || found >= 3) return;
        for (int g : letters) {
            word.push_back(g);
            rec(remaining - 1);
            word.pop_back();
            if (found >= 3) return;
        }
    };
    rec(max_len);
    std::cout << (found ? "" : "no match\n");
    return found ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    if (args.empty()) {
        std::cerr << "usage: corpus-prep <braid '...'> [...]\n"
                  << "       corpus-prep search <candidate.json> <det> <strands> <maxlen>\n";
        return 2;
    }
    if (args[0] == "search") {
        if (args.size() != 5) {
            std::cerr << "search needs: candidate.json det strands maxlen\n";
            return 2;
        }
        return search(args[1], std::stol(args[2]), std::stoi(args[3]), std::stoi(args[4]));
    }
    for (const auto& a : args) describe(parse_braid(a));
    return 0;
}
