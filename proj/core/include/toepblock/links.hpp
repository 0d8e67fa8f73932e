#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace toepblock {

enum class LinkKind {
    SymToeplitz,   // L(i,j) = |i-j|
    Wigner,        // L(i,j) = (min(i,j), max(i,j))
    AsymToeplitz,  // L(i,j) = i-j, used inside blocks only
    FullIid,       // L(i,j) = (i,j), used inside blocks only
    CompositeTBI,  // Toeplitz block structure, Wigner A_0, i.i.d. A_m
    CompositeTBT,  // Toeplitz block structure, Toeplitz blocks throughout
};

const char* link_name(LinkKind kind);
LinkKind parse_link(const std::string& name);
bool is_composite(LinkKind kind);

// Canonical label of a matrix entry. Two entries carry the same input
// variable iff their labels compare equal (within one link; labels are never
// compared across links). For composite links `a` is the block lag after
// folding A_{-m} = A_m^T onto lag m >= 0, and (b,c) is the within-block label.
struct LinkLabel {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;

    friend bool operator==(const LinkLabel&, const LinkLabel&) = default;
    friend auto operator<=>(const LinkLabel&, const LinkLabel&) = default;
};

std::ostream& operator<<(std::ostream& os, const LinkLabel& label);
std::string to_string(const LinkLabel& label);

// A link function instance. For simple links k = 1 and the matrix dimension
// is n; for composite links the dimension is n*k (k blocks of size n).
struct Link {
    LinkKind kind = LinkKind::SymToeplitz;
    int n = 1;
    int k = 1;

    int dim() const { return n * k; }
};

Link make_link(LinkKind kind, int n, int k = 1);

// Canonical label of entry (i,j), 1-based. Throws on out-of-range indices.
LinkLabel link_eval(const Link& link, int i, int j);

// Successor candidates for the counting engine: values v with
// link_eval(link, u, v) == label. At most four, deduplicated, in range.
struct CandidateSet {
    int v[4];
    int count = 0;

    void push(int value) {
        for (int i = 0; i < count; ++i)
            if (v[i] == value) return;
        v[count++] = value;
    }
};

CandidateSet propagate(const Link& link, int u, const LinkLabel& label);

// Finite-n value of the per-row label multiplicity bound Delta(L).
int property_b_delta(const Link& link);

struct AssumptionBStats {
    std::int64_t distinct = 0;          // k_n: number of distinct labels
    std::int64_t max_multiplicity = 0;  // alpha_n
};

AssumptionBStats assumption_b_stats(const Link& link);

}  // namespace toepblock
