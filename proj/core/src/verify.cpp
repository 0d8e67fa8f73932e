#include "toepblock/verify.hpp"

#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "toepblock/address.hpp"
#include "toepblock/links.hpp"
#include "toepblock/words.hpp"

namespace toepblock {

namespace {

// Direct scan of all dim^(2t) closed circuits, evaluating the link function
// forward on every edge. Shares no traversal logic with the counting engine,
// which assigns generating vertices and inverts the link; agreement between
// the two is the point of the counting-oracle suite.
std::uint64_t brute_count(const Link& link, const Word& w) {
    const int h = w.length();
    const int dim = link.dim();
    std::vector<int> pi(h + 1, 1);
    std::uint64_t total = 0;
    while (true) {
        pi[h] = pi[0];
        bool ok = true;
        for (int letter = 0; letter < w.t() && ok; ++letter) {
            int f = w.first_of(letter);
            int s = w.second_of(letter);
            ok = link_eval(link, pi[f - 1], pi[f]) == link_eval(link, pi[s - 1], pi[s]);
        }
        if (ok) ++total;
        int p = 0;
        while (p < h && pi[p] == dim) pi[p++] = 1;
        if (p == h) break;
        ++pi[p];
    }
    return total;
}

std::vector<Word> words_up_to(int t_cap) {
    std::vector<Word> out;
    for (int t = 1; t <= t_cap; ++t)
        for (const Word& w : enumerate_pair_matched(t)) out.push_back(w);
    return out;
}

std::string sign_text(const SignVector& l) {
    std::string s = "(";
    for (std::size_t i = 0; i < l.entries.size(); ++i) {
        if (i) s += ",";
        s += l.entries[i] > 0 ? "+1" : "-1";
    }
    return s + ")";
}

class SuiteRunner {
public:
    explicit SuiteRunner(VerifyReport& report, const CountBudget& budget)
        : report_(report), budget_(budget) {}

    void counting_oracle() {
        const std::vector<LinkKind> simple = {LinkKind::SymToeplitz, LinkKind::Wigner,
                                              LinkKind::AsymToeplitz, LinkKind::FullIid};
        const std::vector<LinkKind> composite = {LinkKind::CompositeTBI, LinkKind::CompositeTBT};
        for (const Word& w : words_up_to(2)) {
            for (LinkKind kind : simple) {
                std::ostringstream detail;
                bool pass = true;
                for (int n = 1; n <= 6 && pass; ++n) {
                    Link link = make_link(kind, n);
                    std::uint64_t engine = count_pi_star(link, w, budget_).count;
                    std::uint64_t brute = brute_count(link, w);
                    if (engine != brute) {
                        pass = false;
                        detail << "n=" << n << ": engine=" << engine << " brute=" << brute;
                    }
                }
                if (pass) detail << "n=1..6 agree";
                add("counting-oracle/" + std::string(link_name(kind)) + "/" + w.letters(), pass,
                    detail.str());
            }
            for (LinkKind kind : composite) {
                std::ostringstream detail;
                bool pass = true;
                for (int n = 1; n <= 6 && pass; ++n) {
                    for (int k = 1; n * k <= 6 && pass; ++k) {
                        Link link = make_link(kind, n, k);
                        std::uint64_t engine = count_pi_star(link, w, budget_).count;
                        std::uint64_t brute = brute_count(link, w);
                        if (engine != brute) {
                            pass = false;
                            detail << "n=" << n << " k=" << k << ": engine=" << engine
                                   << " brute=" << brute;
                        }
                    }
                }
                if (pass) detail << "n*k<=6 agree";
                add("counting-oracle/" + std::string(link_name(kind)) + "/" + w.letters(), pass,
                    detail.str());
            }
        }
    }

    void lemmas() {
        enumeration_counts();
        sign_union();
        sign_decay();
        l0_vs_unsigned();
        toeplitz_catalan_limit();
        wigner_catalan_limit();
    }

    void decomposition() {
        for (Model model : {Model::TBI, Model::TBT}) {
            for (const Word& w : words_up_to(2)) {
                for (int n = 2; n <= 4; ++n) {
                    for (int k = 2; k <= 4; ++k) {
                        DecompositionReport rep = verify_decomposition(w, n, k, model, budget_);
                        std::ostringstream name;
                        name << "decomposition/" << model_name(model) << "/" << w.letters()
                             << "/n=" << n << "/k=" << k;
                        std::ostringstream detail;
                        detail << "composite=" << rep.composite_count
                               << " fibers=" << rep.fiber_sum << " entries=" << rep.entry_sum
                               << " sandwich=[" << rep.sandwich.lower << ","
                               << rep.sandwich.upper << "]";
                        add(name.str(), rep.pass, detail.str());
                        report_.decompositions.push_back(rep);
                    }
                }
            }
        }
    }

private:
    void add(std::string name, bool pass, std::string detail) {
        report_.checks.push_back({std::move(name), pass, std::move(detail)});
    }

    void enumeration_counts() {
        const std::uint64_t sizes[] = {1, 3, 15, 105, 945, 10395};
        const std::uint64_t catalan[] = {1, 2, 5, 14};
        for (int t = 1; t <= 6; ++t) {
            std::uint64_t got = enumerate_pair_matched(t).size();
            std::ostringstream detail;
            detail << "got " << got << ", want " << sizes[t - 1];
            add("word-enumeration/t=" + std::to_string(t), got == sizes[t - 1], detail.str());
        }
        for (int t = 1; t <= 4; ++t) {
            std::uint64_t got = 0;
            for (const Word& w : enumerate_pair_matched(t))
                if (is_catalan(w)) ++got;
            std::ostringstream detail;
            detail << "got " << got << ", want " << catalan[t - 1];
            add("catalan-count/t=" + std::to_string(t), got == catalan[t - 1], detail.str());
        }
    }

    // Union of all sign classes (both signs admitted per letter) must equal
    // the unsigned class. Sign classes are subsets of the unsigned class, so
    // count equality is set equality.
    void sign_union() {
        for (LinkKind kind : {LinkKind::SymToeplitz, LinkKind::Wigner}) {
            for (const Word& w : words_up_to(3)) {
                std::vector<SignChoice> both(w.t(), SignChoice{true, true});
                std::ostringstream detail;
                bool pass = true;
                for (int n = 1; n <= 6 && pass; ++n) {
                    Link link = make_link(kind, n);
                    std::uint64_t unsigned_count = count_pi_star(link, w, budget_).count;
                    std::uint64_t union_count = count_sign_union(link, w, both, budget_);
                    if (unsigned_count != union_count) {
                        pass = false;
                        detail << "n=" << n << ": union=" << union_count
                               << " unsigned=" << unsigned_count;
                    }
                }
                if (pass) detail << "n=1..6 agree";
                add("sign-union/" + std::string(link_name(kind)) + "/" + w.letters(), pass,
                    detail.str());
            }
        }
    }

    // Every class other than the all-minus one loses mass: the normalized
    // count at k = 40 drops below half its value at k = 10.
    void sign_decay() {
        Word w("abab");
        for (const SignVector& l : all_sign_vectors(2)) {
            if (l.entries == std::vector<int>{-1, -1}) continue;
            double at10 = count_pi_star_signed(LinkKind::SymToeplitz, 10, w, l, budget_).normalized;
            double at40 = count_pi_star_signed(LinkKind::SymToeplitz, 40, w, l, budget_).normalized;
            std::ostringstream detail;
            detail << "normalized 10->" << at10 << " 40->" << at40;
            add("sign-decay/SymToeplitz/abab/l=" + sign_text(l), at40 < 0.5 * at10, detail.str());
        }
    }

    // The all-minus class carries the whole unsigned count in the limit.
    void l0_vs_unsigned() {
        for (const Word& w : words_up_to(2)) {
            SignVector l0;
            l0.entries.assign(w.t(), -1);
            double unsigned_norm =
                count_pi_star(LinkKind::SymToeplitz, 80, w, budget_).normalized;
            double l0_norm =
                count_pi_star_signed(LinkKind::SymToeplitz, 80, w, l0, budget_).normalized;
            std::ostringstream detail;
            detail << "unsigned=" << unsigned_norm << " all-minus=" << l0_norm;
            add("l0-vs-unsigned/SymToeplitz/" + w.letters(),
                std::abs(unsigned_norm - l0_norm) < 0.05, detail.str());
        }
    }

    // Catalan words under the sym-Toeplitz link: the normalized count settles
    // at 1; |normalized - 1| shrinks along the grid and ends within 0.05.
    void toeplitz_catalan_limit() {
        const std::vector<int> grid = {10, 20, 40, 80};
        for (const Word& w : words_up_to(3)) {
            if (!is_catalan(w)) continue;
            std::vector<double> devs;
            for (int n : grid)
                devs.push_back(std::abs(count_pi_star(LinkKind::SymToeplitz, n, w, budget_)
                                            .normalized - 1.0));
            bool pass = devs.back() < 0.05;
            for (std::size_t i = 1; i < devs.size(); ++i)
                if (devs[i] > devs[i - 1] + 1e-9) pass = false;
            std::ostringstream detail;
            detail << "|normalized-1| along {10,20,40,80}:";
            for (double d : devs) detail << " " << d;
            add("catalan-limit/SymToeplitz/" + w.letters(), pass, detail.str());
        }
    }

    // Catalan words under the Wigner link at n = 80: the all-minus class is
    // within 0.05 of 1 and every other class is below 0.05.
    void wigner_catalan_limit() {
        for (const Word& w : words_up_to(3)) {
            if (!is_catalan(w)) continue;
            bool pass = true;
            std::ostringstream detail;
            for (const SignVector& l : all_sign_vectors(w.t())) {
                double norm =
                    count_pi_star_signed(LinkKind::Wigner, 80, w, l, budget_).normalized;
                bool is_l0 = true;
                for (int e : l.entries) is_l0 = is_l0 && e == -1;
                bool ok = is_l0 ? std::abs(norm - 1.0) < 0.05 : norm < 0.05;
                if (!ok) {
                    pass = false;
                    detail << "l=" << sign_text(l) << " normalized=" << norm << "; ";
                }
            }
            if (pass) detail << "all classes within bounds";
            add("catalan-limit/Wigner/" + w.letters(), pass, detail.str());
        }
    }

    VerifyReport& report_;
    CountBudget budget_;
};

}  // namespace

std::string VerifyReport::first_failure() const {
    for (const VerifyCheck& check : checks)
        if (!check.pass) return check.name;
    return {};
}

VerifyReport run_verification(const std::string& suite, const CountBudget& budget) {
    VerifyReport report;
    report.suite = suite;
    SuiteRunner runner(report, budget);
    if (suite == "counting-oracle") {
        runner.counting_oracle();
    } else if (suite == "lemmas") {
        runner.lemmas();
    } else if (suite == "decomposition") {
        runner.decomposition();
    } else if (suite == "all") {
        runner.counting_oracle();
        runner.lemmas();
        runner.decomposition();
    } else {
        throw std::invalid_argument(
            "unknown suite '" + suite + "' (expected lemmas, decomposition, counting-oracle, all)");
    }
    report.pass = true;
    for (const VerifyCheck& check : report.checks) report.pass = report.pass && check.pass;
    return report;
}

}  // namespace toepblock
