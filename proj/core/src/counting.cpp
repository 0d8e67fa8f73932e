#include "toepblock/counting.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <utility>

#include "toepblock/parallel.hpp"

namespace toepblock {

std::vector<SignVector> all_sign_vectors(int t) {
    std::vector<SignVector> out;
    out.reserve(std::size_t{1} << t);
    for (int mask = 0; mask < (1 << t); ++mask) {
        SignVector l;
        l.entries.resize(static_cast<std::size_t>(t));
        for (int i = 0; i < t; ++i) l.entries[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? 1 : -1;
        out.push_back(std::move(l));
    }
    return out;
}

namespace {

std::string budget_message(double estimate, double max_nodes) {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "counting budget exceeded: about %.3g node visits needed, budget is %.3g",
                  estimate, max_nodes);
    return buf;
}

}  // namespace

BudgetExceeded::BudgetExceeded(double estimate, double max_nodes)
    : std::runtime_error(budget_message(estimate, max_nodes)),
      estimate_(estimate),
      max_nodes_(max_nodes) {}

namespace {

double node_estimate(int dim, int t) {
    return std::pow(static_cast<double>(dim), t + 1) * std::pow(2.0, t);
}

void check_budget(const Link& link, const Word& w, const CountBudget& budget) {
    const double estimate = node_estimate(link.dim(), w.t());
    if (!(estimate <= budget.max_nodes)) throw BudgetExceeded(estimate, budget.max_nodes);
}

// Backstop for the up-front estimate: aborts enumeration if actual node
// visits (shared across chunks) exceed the budget.
class NodeMeter {
public:
    NodeMeter(std::atomic<std::uint64_t>* shared, double max_nodes)
        : shared_(shared), max_nodes_(max_nodes) {}

    void tick() {
        if (++local_ == kFlushEvery) flush();
    }

    void flush() {
        const std::uint64_t seen = shared_->fetch_add(local_, std::memory_order_relaxed) + local_;
        local_ = 0;
        if (static_cast<double>(seen) > max_nodes_) {
            throw BudgetExceeded(static_cast<double>(seen), max_nodes_);
        }
    }

private:
    static constexpr std::uint64_t kFlushEvery = 1u << 16;
    std::atomic<std::uint64_t>* shared_;
    double max_nodes_;
    std::uint64_t local_ = 0;
};

struct Plan {
    int h = 0;
    int t = 0;
    std::vector<int> letter_of;   // 1-based edge position -> letter index
    std::vector<bool> is_first;   // 1-based edge position -> first occurrence?
};

Plan make_plan(const Word& w) {
    Plan plan;
    plan.h = w.length();
    plan.t = w.t();
    plan.letter_of.assign(static_cast<std::size_t>(plan.h) + 1, 0);
    plan.is_first.assign(static_cast<std::size_t>(plan.h) + 1, false);
    for (int p = 1; p <= plan.h; ++p) {
        plan.letter_of[static_cast<std::size_t>(p)] = w.letter_at(p);
        plan.is_first[static_cast<std::size_t>(p)] = w.is_first_occurrence(p);
    }
    return plan;
}

// Slope-sum enumeration for the symmetric Toeplitz link. A circuit is
// determined by pi(0) and the slopes sigma_p = pi(p-1) - pi(p); with partial
// sums S_p, validity means all S_p fit in a window of width < n, and the
// number of feasible pi(0) is n minus the excursion max S - min S. Dependent
// slopes are +/- the letter's first slope, the final slope is forced by
// closure S_h = 0.
class SlopeDfs {
public:
    SlopeDfs(int n, const Plan& plan, const std::vector<SignChoice>& allowed, NodeMeter meter)
        : n_(n),
          plan_(plan),
          allowed_(allowed),
          first_slope_(static_cast<std::size_t>(plan.t), 0),
          meter_(meter) {}

    // sigma_1 = -(n-1) + offset for offset in [offset_begin, offset_end)
    std::uint64_t run(int offset_begin, int offset_end) {
        for (int offset = offset_begin; offset < offset_end; ++offset) {
            const long long sigma = -(n_ - 1) + offset;
            first_slope_[static_cast<std::size_t>(plan_.letter_of[1])] = sigma;
            descend(2, sigma, std::min(0LL, sigma), std::max(0LL, sigma));
        }
        meter_.flush();
        return total_;
    }

private:
    bool final_slope_ok(int letter, long long sigma) const {
        const long long sf = first_slope_[static_cast<std::size_t>(letter)];
        const auto& choice = allowed_[static_cast<std::size_t>(letter)];
        return (choice.minus && sigma == -sf) || (choice.plus && sigma == sf);
    }

    void descend(int p, long long S, long long lo, long long hi) {
        meter_.tick();
        const int letter = plan_.letter_of[static_cast<std::size_t>(p)];
        if (p == plan_.h) {
            if (final_slope_ok(letter, -S)) {
                total_ += static_cast<std::uint64_t>(n_ - (hi - lo));
            }
            return;
        }
        if (plan_.is_first[static_cast<std::size_t>(p)]) {
            // keep the excursion below n; anything wider admits no pi(0)
            const long long sig_lo = hi - (n_ - 1) - S;
            const long long sig_hi = lo + (n_ - 1) - S;
            for (long long sigma = sig_lo; sigma <= sig_hi; ++sigma) {
                first_slope_[static_cast<std::size_t>(letter)] = sigma;
                const long long S2 = S + sigma;
                descend(p + 1, S2, std::min(lo, S2), std::max(hi, S2));
            }
            return;
        }
        const long long sf = first_slope_[static_cast<std::size_t>(letter)];
        const auto& choice = allowed_[static_cast<std::size_t>(letter)];
        if (choice.minus) try_slope(p, S, lo, hi, -sf);
        if (choice.plus && !(choice.minus && sf == 0)) try_slope(p, S, lo, hi, sf);
    }

    void try_slope(int p, long long S, long long lo, long long hi, long long sigma) {
        const long long S2 = S + sigma;
        const long long lo2 = std::min(lo, S2);
        const long long hi2 = std::max(hi, S2);
        if (hi2 - lo2 >= n_) return;
        descend(p + 1, S2, lo2, hi2);
    }

    int n_;
    const Plan& plan_;
    const std::vector<SignChoice>& allowed_;
    std::vector<long long> first_slope_;
    NodeMeter meter_;
    std::uint64_t total_ = 0;
};

// Position-by-position assignment for every other link. First occurrences
// range over all values; dependent positions take the candidates that
// reproduce the letter's label (or, in sign mode, repeat/swap the letter's
// first ordered pair). The final position is pinned to pi(0) by closure.
class ValueDfs {
public:
    ValueDfs(const Link& link, const Plan& plan, const std::vector<SignChoice>* allowed,
             NodeMeter meter)
        : link_(link),
          N_(link.dim()),
          plan_(plan),
          allowed_(allowed),
          labels_(static_cast<std::size_t>(plan.t)),
          ends_(static_cast<std::size_t>(plan.t)),
          pi_(static_cast<std::size_t>(plan.h) + 1, 0),
          meter_(meter) {}

    // pi(0) = 1 + offset for offset in [offset_begin, offset_end)
    std::uint64_t run(int offset_begin, int offset_end) {
        for (int offset = offset_begin; offset < offset_end; ++offset) {
            pi_[0] = 1 + offset;
            descend(1);
        }
        meter_.flush();
        return total_;
    }

private:
    void descend(int p) {
        meter_.tick();
        const int letter = plan_.letter_of[static_cast<std::size_t>(p)];
        const int u = pi_[static_cast<std::size_t>(p) - 1];
        if (p == plan_.h) {
            total_ += closes(letter, u, pi_[0]) ? 1 : 0;
            return;
        }
        if (plan_.is_first[static_cast<std::size_t>(p)]) {
            for (int v = 1; v <= N_; ++v) {
                labels_[static_cast<std::size_t>(letter)] = link_eval(link_, u, v);
                ends_[static_cast<std::size_t>(letter)] = {u, v};
                pi_[static_cast<std::size_t>(p)] = v;
                descend(p + 1);
            }
            return;
        }
        CandidateSet candidates;
        if (allowed_) {
            const auto [eu, ev] = ends_[static_cast<std::size_t>(letter)];
            const auto& choice = (*allowed_)[static_cast<std::size_t>(letter)];
            if (choice.plus && u == eu) candidates.push(ev);
            if (choice.minus && u == ev) candidates.push(eu);
        } else {
            candidates = propagate(link_, u, labels_[static_cast<std::size_t>(letter)]);
        }
        for (int c = 0; c < candidates.count; ++c) {
            pi_[static_cast<std::size_t>(p)] = candidates.v[c];
            descend(p + 1);
        }
    }

    bool closes(int letter, int u, int v) const {
        if (allowed_) {
            const auto [eu, ev] = ends_[static_cast<std::size_t>(letter)];
            const auto& choice = (*allowed_)[static_cast<std::size_t>(letter)];
            return (choice.plus && u == eu && v == ev) || (choice.minus && u == ev && v == eu);
        }
        return link_eval(link_, u, v) == labels_[static_cast<std::size_t>(letter)];
    }

    Link link_;
    int N_;
    const Plan& plan_;
    const std::vector<SignChoice>* allowed_;
    std::vector<LinkLabel> labels_;
    std::vector<std::pair<int, int>> ends_;
    std::vector<int> pi_;
    NodeMeter meter_;
    std::uint64_t total_ = 0;
};

std::uint64_t count_slope(int n, const Word& w, const std::vector<SignChoice>& allowed,
                          const CountBudget& budget) {
    const Plan plan = make_plan(w);
    std::atomic<std::uint64_t> nodes{0};
    const int top = 2 * n - 1;
    std::vector<std::uint64_t> totals(static_cast<std::size_t>(std::max(1, budget.jobs)), 0);
    parallel_chunks(budget.jobs, top, [&](int chunk, int begin, int end) {
        SlopeDfs dfs(n, plan, allowed, NodeMeter(&nodes, budget.max_nodes));
        totals[static_cast<std::size_t>(chunk)] = dfs.run(begin, end);
    });
    std::uint64_t total = 0;
    for (std::uint64_t part : totals) total += part;
    return total;
}

std::uint64_t count_value(const Link& link, const Word& w, const std::vector<SignChoice>* allowed,
                          const CountBudget& budget) {
    const Plan plan = make_plan(w);
    std::atomic<std::uint64_t> nodes{0};
    std::vector<std::uint64_t> totals(static_cast<std::size_t>(std::max(1, budget.jobs)), 0);
    parallel_chunks(budget.jobs, link.dim(), [&](int chunk, int begin, int end) {
        ValueDfs dfs(link, plan, allowed, NodeMeter(&nodes, budget.max_nodes));
        totals[static_cast<std::size_t>(chunk)] = dfs.run(begin, end);
    });
    std::uint64_t total = 0;
    for (std::uint64_t part : totals) total += part;
    return total;
}

std::vector<SignChoice> both_signs(int t) {
    return std::vector<SignChoice>(static_cast<std::size_t>(t), SignChoice{true, true});
}

std::vector<SignChoice> single_sign(const SignVector& l) {
    std::vector<SignChoice> allowed(l.entries.size());
    for (std::size_t i = 0; i < l.entries.size(); ++i) {
        if (l.entries[i] == 1) {
            allowed[i].plus = true;
        } else {
            allowed[i].minus = true;
        }
    }
    return allowed;
}

void check_sign_vector(const Word& w, const SignVector& l) {
    if (static_cast<int>(l.entries.size()) != w.t()) {
        throw std::invalid_argument("sign vector length must equal the number of letters");
    }
    for (int e : l.entries) {
        if (e != 1 && e != -1) throw std::invalid_argument("sign entries must be +1 or -1");
    }
}

void check_signable(const Link& link) {
    if (link.kind != LinkKind::SymToeplitz && link.kind != LinkKind::Wigner) {
        throw std::invalid_argument("sign classes exist only for sym-toeplitz and wigner links");
    }
}

CountResult assemble(const Word& w, const Link& link, std::optional<SignVector> sign,
                     std::uint64_t count) {
    const double denom = std::pow(static_cast<double>(link.dim()), w.t() + 1);
    return CountResult{w, link.kind, link.dim(), std::move(sign), count,
                       static_cast<double>(count) / denom};
}

}  // namespace

CountResult count_pi_star(const Link& link, const Word& w, const CountBudget& budget) {
    check_budget(link, w, budget);
    const std::uint64_t count =
        link.kind == LinkKind::SymToeplitz
            ? count_slope(link.n, w, both_signs(w.t()), budget)
            : count_value(link, w, nullptr, budget);
    return assemble(w, link, std::nullopt, count);
}

CountResult count_pi_star(LinkKind kind, int n, const Word& w, const CountBudget& budget) {
    if (is_composite(kind)) {
        throw std::invalid_argument("composite links need an explicit (n, k) Link");
    }
    return count_pi_star(make_link(kind, n), w, budget);
}

CountResult count_pi_star_signed(const Link& link, const Word& w, const SignVector& l,
                                 const CountBudget& budget) {
    check_signable(link);
    check_sign_vector(w, l);
    check_budget(link, w, budget);
    std::uint64_t count;
    if (link.kind == LinkKind::SymToeplitz) {
        count = count_slope(link.n, w, single_sign(l), budget);
    } else {
        const auto allowed = single_sign(l);
        count = count_value(link, w, &allowed, budget);
    }
    return assemble(w, link, l, count);
}

CountResult count_pi_star_signed(LinkKind kind, int n, const Word& w, const SignVector& l,
                                 const CountBudget& budget) {
    return count_pi_star_signed(make_link(kind, n), w, l, budget);
}

std::uint64_t count_sign_union(const Link& link, const Word& w,
                               const std::vector<SignChoice>& allowed,
                               const CountBudget& budget) {
    check_signable(link);
    if (static_cast<int>(allowed.size()) != w.t()) {
        throw std::invalid_argument("one sign choice per letter required");
    }
    check_budget(link, w, budget);
    if (link.kind == LinkKind::SymToeplitz) {
        return count_slope(link.n, w, allowed, budget);
    }
    return count_value(link, w, &allowed, budget);
}

PFit estimate_p(LinkKind kind, const Word& w, const std::vector<int>& n_grid,
                const CountBudget& budget) {
    if (n_grid.size() < 3) {
        throw std::invalid_argument("estimate_p needs at least 3 grid sizes");
    }
    for (std::size_t i = 0; i < n_grid.size(); ++i) {
        if (n_grid[i] < 1 || (i > 0 && n_grid[i] <= n_grid[i - 1])) {
            throw std::invalid_argument("estimate_p grid must be ascending positive sizes");
        }
    }

    PFit fit;
    fit.grid = n_grid;
    for (int n : n_grid) {
        fit.normalized.push_back(count_pi_star(kind, n, w, budget).normalized);
    }

    // least squares for y = p + c/n
    const auto m = static_cast<double>(n_grid.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n_grid.size(); ++i) {
        const double x = 1.0 / n_grid[i];
        const double y = fit.normalized[i];
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double denom = m * sxx - sx * sx;
    const double c = (m * sxy - sx * sy) / denom;
    fit.p_hat = (sy - c * sx) / m;

    double ss = 0;
    for (std::size_t i = 0; i < n_grid.size(); ++i) {
        const double r = fit.normalized[i] - fit.p_hat - c / n_grid[i];
        ss += r * r;
    }
    fit.residual = std::sqrt(ss / m);
    return fit;
}

}  // namespace toepblock
