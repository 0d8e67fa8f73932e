#include "toepblock/address.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

namespace toepblock {

namespace {

void check_closed(const Circuit& pi, const char* what) {
    if (pi.size() < 2 || pi.front() != pi.back()) {
        throw std::invalid_argument(std::string(what) + " must be a closed circuit");
    }
}

int block_of(int value, int n) { return (value - 1) / n + 1; }
int entry_of(int value, int n) { return (value - 1) % n + 1; }

}  // namespace

Circuit block_address(const Circuit& pi, int n) {
    check_closed(pi, "circuit");
    Circuit out(pi.size());
    for (std::size_t i = 0; i < pi.size(); ++i) out[i] = block_of(pi[i], n);
    return out;
}

Circuit entry_address(const Circuit& pi, int n) {
    check_closed(pi, "circuit");
    Circuit out(pi.size());
    for (std::size_t i = 0; i < pi.size(); ++i) out[i] = entry_of(pi[i], n);
    return out;
}

Circuit compose(const Circuit& pi_b, const Circuit& pi_e, int n) {
    if (pi_b.size() != pi_e.size()) {
        throw std::invalid_argument("block and entry circuits must have equal length");
    }
    Circuit out(pi_b.size());
    for (std::size_t i = 0; i < pi_b.size(); ++i) {
        if (pi_b[i] < 1 || pi_e[i] < 1 || pi_e[i] > n) {
            throw std::invalid_argument("compose: address values out of range");
        }
        out[i] = (pi_b[i] - 1) * n + pi_e[i];
    }
    return out;
}

bool circuit_matched(const Link& link, const Word& w, const Circuit& pi) {
    if (static_cast<int>(pi.size()) != w.length() + 1) {
        throw std::invalid_argument("circuit length must be word length plus one");
    }
    check_closed(pi, "circuit");
    for (int letter = 0; letter < w.t(); ++letter) {
        const int f = w.first_of(letter);
        const int s = w.second_of(letter);
        const LinkLabel first = link_eval(link, pi[static_cast<std::size_t>(f) - 1],
                                          pi[static_cast<std::size_t>(f)]);
        const LinkLabel second = link_eval(link, pi[static_cast<std::size_t>(s) - 1],
                                           pi[static_cast<std::size_t>(s)]);
        if (!(first == second)) return false;
    }
    return true;
}

std::vector<Circuit> enumerate_pi_star(const Link& link, const Word& w,
                                       const CountBudget& budget) {
    const int h = w.length();
    const int N = link.dim();
    const double visits = std::pow(static_cast<double>(N), h);
    if (!(visits <= budget.max_nodes)) throw BudgetExceeded(visits, budget.max_nodes);

    std::vector<Circuit> out;
    Circuit pi(static_cast<std::size_t>(h) + 1, 1);
    while (true) {
        pi[static_cast<std::size_t>(h)] = pi[0];
        if (circuit_matched(link, w, pi)) out.push_back(pi);
        int pos = 0;
        while (pos < h && pi[static_cast<std::size_t>(pos)] == N) {
            pi[static_cast<std::size_t>(pos++)] = 1;
        }
        if (pos == h) return out;
        ++pi[static_cast<std::size_t>(pos)];
    }
}

namespace {

// Counts composite matched circuits with one address component pinned. Free
// positions run over the other component; dependent positions take label
// candidates filtered to the pinned component.
class PinnedDfs {
public:
    PinnedDfs(const Link& link, const Word& w, const Circuit& pinned, bool pin_block)
        : link_(link),
          w_(w),
          pinned_(pinned),
          pin_block_(pin_block),
          n_(link.n),
          h_(w.length()),
          labels_(static_cast<std::size_t>(w.t())),
          value_(static_cast<std::size_t>(h_), 0) {}

    std::uint64_t run() {
        descend(0);
        return total_;
    }

private:
    int free_range() const { return pin_block_ ? n_ : link_.k; }

    int composed(int pos, int free_value) const {
        const int fixed = pinned_[static_cast<std::size_t>(pos)];
        return pin_block_ ? (fixed - 1) * n_ + free_value : (free_value - 1) * n_ + fixed;
    }

    bool candidate_fits(int pos, int value) const {
        const int fixed = pinned_[static_cast<std::size_t>(pos)];
        return (pin_block_ ? block_of(value, n_) : entry_of(value, n_)) == fixed;
    }

    bool close_ok() const {
        const int letter = w_.letter_at(h_);
        return link_eval(link_, value_[static_cast<std::size_t>(h_) - 1], value_[0]) ==
               labels_[static_cast<std::size_t>(letter)];
    }

    void enter(int pos, int value) {
        value_[static_cast<std::size_t>(pos)] = value;
        if (pos == h_ - 1 && !close_ok()) return;
        descend(pos + 1);
    }

    void descend(int pos) {
        if (pos == h_) {
            ++total_;
            return;
        }
        if (pos == 0 || w_.is_first_occurrence(pos)) {
            for (int f = 1; f <= free_range(); ++f) {
                const int value = composed(pos, f);
                if (pos >= 1) {
                    const int letter = w_.letter_at(pos);
                    labels_[static_cast<std::size_t>(letter)] =
                        link_eval(link_, value_[static_cast<std::size_t>(pos) - 1], value);
                }
                enter(pos, value);
            }
            return;
        }
        const int letter = w_.letter_at(pos);
        const CandidateSet candidates =
            propagate(link_, value_[static_cast<std::size_t>(pos) - 1],
                      labels_[static_cast<std::size_t>(letter)]);
        for (int c = 0; c < candidates.count; ++c) {
            if (candidate_fits(pos, candidates.v[c])) enter(pos, candidates.v[c]);
        }
    }

    Link link_;
    const Word& w_;
    const Circuit& pinned_;
    bool pin_block_;
    int n_;
    int h_;
    std::vector<LinkLabel> labels_;
    std::vector<int> value_;
    std::uint64_t total_ = 0;
};

long long slope_at(const Circuit& pi, int p) {
    return pi[static_cast<std::size_t>(p) - 1] - pi[static_cast<std::size_t>(p)];
}

// Per-letter signs compatible with the circuit's slopes: l is admissible for
// a letter when first slope = l * second slope.
std::vector<SignChoice> compatible_signs(const Word& w, const Circuit& pi) {
    std::vector<SignChoice> allowed(static_cast<std::size_t>(w.t()));
    for (int letter = 0; letter < w.t(); ++letter) {
        const long long sf = slope_at(pi, w.first_of(letter));
        const long long ss = slope_at(pi, w.second_of(letter));
        allowed[static_cast<std::size_t>(letter)].plus = sf == ss;
        allowed[static_cast<std::size_t>(letter)].minus = sf == -ss;
    }
    return allowed;
}

void check_block_membership(const Word& w, const Circuit& pi_b) {
    if (static_cast<int>(pi_b.size()) != w.length() + 1) {
        throw std::invalid_argument("block circuit length must be word length plus one");
    }
    check_closed(pi_b, "block circuit");
    for (int v : pi_b) {
        if (v < 1) throw std::invalid_argument("block circuit values must be positive");
    }
    for (int letter = 0; letter < w.t(); ++letter) {
        const long long sf = slope_at(pi_b, w.first_of(letter));
        const long long ss = slope_at(pi_b, w.second_of(letter));
        if (std::abs(sf) != std::abs(ss)) {
            throw std::invalid_argument(
                "block circuit is not Toeplitz-matched for word " + w.letters());
        }
    }
}

LinkKind entry_link(Model model) {
    return model == Model::TBI ? LinkKind::Wigner : LinkKind::SymToeplitz;
}

}  // namespace

std::uint64_t fiber_size(const Circuit& pi_b, const Word& w, Model model, int n,
                         const CountBudget& budget) {
    check_block_membership(w, pi_b);
    const double estimate =
        std::pow(static_cast<double>(n), w.t() + 1) * std::pow(2.0, w.t());
    if (!(estimate <= budget.max_nodes)) throw BudgetExceeded(estimate, budget.max_nodes);

    const int k = *std::max_element(pi_b.begin(), pi_b.end());
    const Link composite = make_link(model_link(model), n, k);
    const std::uint64_t direct = PinnedDfs(composite, w, pi_b, true).run();

    const std::uint64_t via_union = count_sign_union(
        make_link(entry_link(model), n), w, compatible_signs(w, pi_b), budget);

    if (direct != via_union) {
        throw VerificationError("fiber size mismatch for word " + w.letters() + ": direct " +
                                std::to_string(direct) + ", sign-union formula " +
                                std::to_string(via_union));
    }
    return direct;
}

DecompositionReport verify_decomposition(const Word& w, int n, int k, Model model,
                                         const CountBudget& budget) {
    const Link composite = make_link(model_link(model), n, k);
    const Link block = make_link(LinkKind::SymToeplitz, k);
    const Link entry = make_link(entry_link(model), n);

    DecompositionReport report{w, n, k, model, 0, 0, 0, {}, false};
    report.composite_count = count_pi_star(composite, w, budget).count;

    for (const Circuit& pi_b : enumerate_pi_star(block, w, budget)) {
        report.fiber_sum += fiber_size(pi_b, w, model, n, budget);
    }
    for (const Circuit& pi_e : enumerate_pi_star(entry, w, budget)) {
        report.entry_sum += PinnedDfs(composite, w, pi_e, false).run();
    }

    const SignVector l0{std::vector<int>(static_cast<std::size_t>(w.t()), -1)};
    report.sandwich.lower = count_pi_star_signed(entry, w, l0, budget).count *
                            count_pi_star_signed(block, w, l0, budget).count;
    report.sandwich.value = report.composite_count;
    report.sandwich.upper =
        count_pi_star(entry, w, budget).count * count_pi_star(block, w, budget).count;
    report.sandwich.pass = report.sandwich.lower <= report.sandwich.value &&
                           report.sandwich.value <= report.sandwich.upper;

    report.pass = report.fiber_sum == report.composite_count &&
                  report.entry_sum == report.composite_count && report.sandwich.pass;
    return report;
}

}  // namespace toepblock
