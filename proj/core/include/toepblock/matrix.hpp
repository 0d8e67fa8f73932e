#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <vector>

#include "toepblock/input.hpp"
#include "toepblock/links.hpp"

namespace toepblock {

enum class Model { TBI, TBT };

const char* model_name(Model model);
Model parse_model(const std::string& name);
LinkKind model_link(Model model);

// Dense real symmetric matrix, row-major, 0-based accessors.
class SymmetricMatrix {
public:
    SymmetricMatrix() = default;
    explicit SymmetricMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}

    int dim() const { return n_; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const std::vector<double>& data() const { return a_; }

private:
    int n_ = 0;
    std::vector<double> a_;
};

// Maps canonical labels to input values. The seeded implementation draws from
// per-lag streams; the table implementation serves explicit values in tests.
class InputSource {
public:
    virtual ~InputSource() = default;
    virtual double value(const LinkLabel& label) const = 0;
};

// label -> (stream, index): stream is the block lag (0 for simple links),
// the within-block part indexes the stream. Signed lags use the zig-zag map
// 0,-1,1,-2,2,... -> 0,1,2,3,4,... so indices do not depend on n.
class StreamSource : public InputSource {
public:
    StreamSource(const Link& link, const InputSpec& spec);
    double value(const LinkLabel& label) const override;

private:
    Link link_;
    InputSpec spec_;
    std::vector<InputStream> streams_;  // one per lag 0..k-1
};

class TableSource : public InputSource {
public:
    explicit TableSource(std::map<LinkLabel, double> values) : values_(std::move(values)) {}
    double value(const LinkLabel& label) const override;

private:
    std::map<LinkLabel, double> values_;
};

// Patterned matrix: entry (i,j) = value(link_eval(i,j)). Simple links only.
SymmetricMatrix build_patterned(LinkKind kind, int n, const InputSpec& spec);
SymmetricMatrix build_patterned(const Link& link, const InputSource& source);

// Block matrix of dimension n*k for the chosen model.
SymmetricMatrix build_block_matrix(Model model, int k, int n, const InputSpec& spec);
SymmetricMatrix build_block_matrix(Model model, int k, int n, const InputSource& source);

// Plain-text dump: first line N, then N rows of N space-separated values at
// 17 significant digits. read_matrix parses the same format.
void write_matrix(const SymmetricMatrix& m, std::ostream& os);
SymmetricMatrix read_matrix(std::istream& is);

}  // namespace toepblock
