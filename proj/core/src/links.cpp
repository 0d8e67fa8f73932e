#include "toepblock/links.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <stdexcept>

namespace toepblock {

const char* link_name(LinkKind kind) {
    switch (kind) {
        case LinkKind::SymToeplitz: return "sym-toeplitz";
        case LinkKind::Wigner: return "wigner";
        case LinkKind::AsymToeplitz: return "asym-toeplitz";
        case LinkKind::FullIid: return "full-iid";
        case LinkKind::CompositeTBI: return "tbi";
        case LinkKind::CompositeTBT: return "tbt";
    }
    return "?";
}

LinkKind parse_link(const std::string& name) {
    if (name == "sym-toeplitz") return LinkKind::SymToeplitz;
    if (name == "wigner") return LinkKind::Wigner;
    if (name == "asym-toeplitz") return LinkKind::AsymToeplitz;
    if (name == "full-iid") return LinkKind::FullIid;
    if (name == "tbi") return LinkKind::CompositeTBI;
    if (name == "tbt") return LinkKind::CompositeTBT;
    throw std::invalid_argument("unknown link '" + name + "'");
}

bool is_composite(LinkKind kind) {
    return kind == LinkKind::CompositeTBI || kind == LinkKind::CompositeTBT;
}

std::ostream& operator<<(std::ostream& os, const LinkLabel& label) {
    return os << '(' << label.a << ',' << label.b << ',' << label.c << ')';
}

std::string to_string(const LinkLabel& label) {
    return '(' + std::to_string(label.a) + ',' + std::to_string(label.b) + ',' +
           std::to_string(label.c) + ')';
}

Link make_link(LinkKind kind, int n, int k) {
    if (n < 1) throw std::invalid_argument("link size n must be >= 1");
    if (is_composite(kind)) {
        if (k < 1) throw std::invalid_argument("composite link needs k >= 1");
    } else if (k != 1) {
        throw std::invalid_argument("simple links take k = 1");
    }
    return Link{kind, n, k};
}

namespace {

void check_range(const Link& link, int i, int j) {
    const int N = link.dim();
    if (i < 1 || i > N || j < 1 || j > N)
        throw std::out_of_range("link_eval index out of range");
}

}  // namespace

LinkLabel link_eval(const Link& link, int i, int j) {
    check_range(link, i, j);
    switch (link.kind) {
        case LinkKind::SymToeplitz:
            return {std::abs(i - j), 0, 0};
        case LinkKind::Wigner:
            return {std::min(i, j), std::max(i, j), 0};
        case LinkKind::AsymToeplitz:
            return {i - j, 0, 0};
        case LinkKind::FullIid:
            return {i, j, 0};
        case LinkKind::CompositeTBI:
        case LinkKind::CompositeTBT:
            break;
    }
    const int n = link.n;
    const int m = (i - 1) / n - (j - 1) / n;  // block lag, row minus column
    int a = (i - 1) % n + 1;
    int b = (j - 1) % n + 1;
    if (m < 0) std::swap(a, b);  // A_{-m} = A_m^T: read the transposed entry
    const int lag = std::abs(m);
    if (link.kind == LinkKind::CompositeTBI) {
        if (lag == 0) return {0, std::min(a, b), std::max(a, b)};  // Wigner A_0
        return {lag, a, b};                                        // i.i.d. A_lag
    }
    if (lag == 0) return {0, std::abs(a - b), 0};  // symmetric Toeplitz A_0
    return {lag, a - b, 0};                        // asymmetric Toeplitz A_lag
}

CandidateSet propagate(const Link& link, int u, const LinkLabel& label) {
    CandidateSet out;
    const int n = link.n;
    const int N = link.dim();
    auto push_in_range = [&](long long v) {
        if (v >= 1 && v <= N) out.push(static_cast<int>(v));
    };

    switch (link.kind) {
        case LinkKind::SymToeplitz:
            push_in_range(u - label.a);
            push_in_range(u + label.a);
            return out;
        case LinkKind::Wigner:
            if (u == label.a) push_in_range(label.b);
            if (u == label.b) push_in_range(label.a);
            return out;
        case LinkKind::AsymToeplitz:
            push_in_range(u - label.a);
            return out;
        case LinkKind::FullIid:
            if (u == label.a) push_in_range(label.b);
            return out;
        case LinkKind::CompositeTBI:
        case LinkKind::CompositeTBT:
            break;
    }

    const int bu = (u - 1) / n + 1;
    const int eu = (u - 1) % n + 1;
    const int lag = static_cast<int>(label.a);
    auto push_entry = [&](int bv, long long ev) {
        if (bv >= 1 && bv <= link.k && ev >= 1 && ev <= n)
            out.push((bv - 1) * n + static_cast<int>(ev));
    };

    if (link.kind == LinkKind::CompositeTBI) {
        if (lag == 0) {
            if (eu == label.b) push_entry(bu, label.c);
            if (eu == label.c) push_entry(bu, label.b);
        } else {
            // edge at lag +m reads A_m(eu, ev); at lag -m it reads A_m(ev, eu)
            if (eu == label.b) push_entry(bu - lag, label.c);
            if (eu == label.c) push_entry(bu + lag, label.b);
        }
        return out;
    }

    if (lag == 0) {
        push_entry(bu, eu - label.b);
        push_entry(bu, eu + label.b);
    } else {
        push_entry(bu - lag, eu - label.b);
        push_entry(bu + lag, eu + label.b);
    }
    return out;
}

int property_b_delta(const Link& link) {
    if (is_composite(link.kind))
        throw std::invalid_argument("property_b_delta: non-composite links only");
    const int N = link.dim();
    int delta = 0;
    for (int i = 1; i <= N; ++i) {
        std::map<LinkLabel, int> row;
        for (int j = 1; j <= N; ++j) delta = std::max(delta, ++row[link_eval(link, i, j)]);
    }
    return delta;
}

AssumptionBStats assumption_b_stats(const Link& link) {
    if (is_composite(link.kind))
        throw std::invalid_argument("assumption_b_stats: non-composite links only");
    const int N = link.dim();
    std::map<LinkLabel, std::int64_t> counts;
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) ++counts[link_eval(link, i, j)];
    AssumptionBStats stats;
    stats.distinct = static_cast<std::int64_t>(counts.size());
    for (const auto& [label, count] : counts)
        stats.max_multiplicity = std::max(stats.max_multiplicity, count);
    return stats;
}

}  // namespace toepblock
