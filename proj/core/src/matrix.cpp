#include "toepblock/matrix.hpp"

#include <iomanip>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace toepblock {

const char* model_name(Model model) {
    return model == Model::TBI ? "tbi" : "tbt";
}

Model parse_model(const std::string& name) {
    if (name == "tbi") return Model::TBI;
    if (name == "tbt") return Model::TBT;
    throw std::invalid_argument("unknown model: " + name);
}

LinkKind model_link(Model model) {
    return model == Model::TBI ? LinkKind::CompositeTBI : LinkKind::CompositeTBT;
}

namespace {

// 0,-1,1,-2,2,... -> 0,1,2,3,4,...
std::int64_t zigzag(std::int64_t d) {
    return d > 0 ? 2 * d : -2 * d - (d < 0 ? 1 : 0);
}

struct StreamIndex {
    std::int64_t stream;
    std::int64_t index;
};

StreamIndex locate(const Link& link, const LinkLabel& label) {
    const std::int64_t n = link.n;
    switch (link.kind) {
        case LinkKind::SymToeplitz:
            return {0, label.a};
        case LinkKind::Wigner:
            return {0, (label.a - 1) * n + (label.b - 1)};
        case LinkKind::AsymToeplitz:
            return {0, zigzag(label.a)};
        case LinkKind::FullIid:
            return {0, (label.a - 1) * n + (label.b - 1)};
        case LinkKind::CompositeTBI:
            if (label.a == 0) return {0, (label.b - 1) * n + (label.c - 1)};
            return {label.a, (label.b - 1) * n + (label.c - 1)};
        case LinkKind::CompositeTBT:
            if (label.a == 0) return {0, label.b};
            return {label.a, zigzag(label.b)};
    }
    throw std::logic_error("unhandled link kind");
}

}  // namespace

StreamSource::StreamSource(const Link& link, const InputSpec& spec) : link_(link), spec_(spec) {
    streams_.reserve(static_cast<std::size_t>(link.k));
    for (int lag = 0; lag < link.k; ++lag) {
        streams_.push_back(sample_input(spec, lag));
    }
}

double StreamSource::value(const LinkLabel& label) const {
    const StreamIndex where = locate(link_, label);
    return streams_[static_cast<std::size_t>(where.stream)].at(where.index);
}

double TableSource::value(const LinkLabel& label) const {
    auto it = values_.find(label);
    if (it == values_.end()) {
        throw std::out_of_range("no input value for label " + to_string(label));
    }
    return it->second;
}

SymmetricMatrix build_patterned(LinkKind kind, int n, const InputSpec& spec) {
    const Link link = make_link(kind, n);
    const StreamSource source(link, spec);
    return build_patterned(link, source);
}

SymmetricMatrix build_patterned(const Link& link, const InputSource& source) {
    if (is_composite(link.kind)) {
        throw std::invalid_argument("build_patterned requires a simple link");
    }
    const int n = link.n;
    SymmetricMatrix m(n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            m(i - 1, j - 1) = source.value(link_eval(link, i, j));
        }
    }
    return m;
}

SymmetricMatrix build_block_matrix(Model model, int k, int n, const InputSpec& spec) {
    const Link link = make_link(model_link(model), n, k);
    const StreamSource source(link, spec);
    return build_block_matrix(model, k, n, source);
}

SymmetricMatrix build_block_matrix(Model model, int k, int n, const InputSource& source) {
    const Link link = make_link(model_link(model), n, k);
    const int dim = n * k;
    SymmetricMatrix m(dim);
    for (int i = 1; i <= dim; ++i) {
        for (int j = 1; j <= dim; ++j) {
            m(i - 1, j - 1) = source.value(link_eval(link, i, j));
        }
    }
    return m;
}

void write_matrix(const SymmetricMatrix& m, std::ostream& os) {
    const int n = m.dim();
    os << n << '\n';
    os << std::setprecision(17);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j) os << ' ';
            os << m(i, j);
        }
        os << '\n';
    }
}

SymmetricMatrix read_matrix(std::istream& is) {
    int n = 0;
    if (!(is >> n) || n <= 0) {
        throw std::runtime_error("bad matrix header");
    }
    SymmetricMatrix m(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (!(is >> m(i, j))) {
                throw std::runtime_error("truncated matrix data");
            }
        }
    }
    return m;
}

}  // namespace toepblock
