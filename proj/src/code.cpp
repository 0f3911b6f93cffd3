#include "codewidth/code.hpp"

#include <bit>
#include <fstream>
#include <sstream>

namespace codewidth {

LinearCode::LinearCode(Matrix gen, int n, int k) : gen_(std::move(gen)), n_(n), k_(k) {
    if (gen_.field().modulus() == 2 && n_ <= 64) {
        packed_rows_.resize(k_, 0);
        for (int i = 0; i < k_; ++i)
            for (int j = 0; j < n_; ++j)
                if (gen_.at(i, j)) packed_rows_[i] |= std::uint64_t{1} << j;
    }
}

LinearCode LinearCode::from_generator(const Matrix& gen) {
    if (gen.rows() == 0 || gen.cols() == 0)
        throw std::invalid_argument("LinearCode: empty generator matrix");
    RrefResult r = rref(gen);
    const int k = static_cast<int>(r.pivots.size());
    if (k == 0) throw std::invalid_argument("LinearCode: generator matrix is zero");
    Matrix basis(gen.field(), k, gen.cols());
    for (int i = 0; i < k; ++i)
        for (std::size_t j = 0; j < gen.cols(); ++j) basis.set(i, j, r.matrix.at(i, j));
    return LinearCode(std::move(basis), static_cast<int>(gen.cols()), k);
}

LinearCode LinearCode::from_generator(std::uint32_t q, const std::vector<std::vector<std::uint32_t>>& rows) {
    return from_generator(Matrix::from_rows(PrimeField(q), rows));
}

LinearCode LinearCode::reed_muller(int r, int m) {
    if (m < 1 || r < 0 || r > m)
        throw std::invalid_argument("reed_muller: need 0 <= r <= m and m >= 1, got r=" +
                                    std::to_string(r) + " m=" + std::to_string(m));
    if (m > 12) throw std::invalid_argument("reed_muller: m > 12 generator would be too large");
    const std::size_t n = std::size_t{1} << m;
    std::vector<std::vector<std::uint32_t>> rows;
    // Monomials x_S = prod_{j in S} x_j for |S| <= r, in (degree, S) order.
    for (int deg = 0; deg <= r; ++deg)
        for (std::uint32_t s = 0; s < (1u << m); ++s) {
            if (std::popcount(s) != deg) continue;
            std::vector<std::uint32_t> row(n);
            for (std::size_t i = 0; i < n; ++i) row[i] = (s & ~i) == 0 ? 1 : 0;
            rows.push_back(std::move(row));
        }
    return from_generator(2, rows);
}

LinearCode LinearCode::reed_solomon(int n, int k, std::uint32_t p) {
    PrimeField f(p);
    if (k < 1 || k > n || static_cast<std::uint32_t>(n) > p)
        throw std::invalid_argument("reed_solomon: need 1 <= k <= n <= p, got n=" + std::to_string(n) +
                                    " k=" + std::to_string(k) + " p=" + std::to_string(p));
    Matrix g(f, static_cast<std::size_t>(k), static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        std::uint32_t pw = 1;  // j^0
        for (int i = 0; i < k; ++i) {
            g.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), pw);
            pw = f.mul(pw, static_cast<std::uint32_t>(j));
        }
    }
    return from_generator(g);
}

namespace {

[[noreturn]] void parse_fail(const std::string& name, int line, const std::string& msg) {
    throw std::runtime_error(name + ":" + std::to_string(line) + ": " + msg);
}

[[noreturn]] void parse_fail(const std::string& name, int line, int col, const std::string& msg) {
    throw std::runtime_error(name + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
}

}  // namespace

LinearCode LinearCode::parse(std::istream& in, const std::string& name) {
    std::string text;
    int lineno = 0;
    if (!std::getline(in, text)) parse_fail(name, 1, "missing header line \"q n k\"");
    ++lineno;
    long long q = -1, n = -1, k = -1;
    {
        std::istringstream hs(text);
        std::string extra;
        if (!(hs >> q >> n >> k)) parse_fail(name, lineno, "header must be three integers \"q n k\"");
        if (hs >> extra) parse_fail(name, lineno, "trailing token \"" + extra + "\" after header");
    }
    if (q < 2 || q >= 65536) parse_fail(name, lineno, "q=" + std::to_string(q) + " outside [2, 65536)");
    if (!PrimeField::is_prime(static_cast<std::uint32_t>(q)))
        parse_fail(name, lineno, "q=" + std::to_string(q) + " is not prime");
    if (n < 1 || k < 1 || k > n)
        parse_fail(name, lineno, "need 1 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));

    std::vector<std::vector<std::uint32_t>> rows;
    for (long long i = 0; i < k; ++i) {
        if (!std::getline(in, text))
            parse_fail(name, lineno + 1, "unexpected end of file: expected " + std::to_string(k) +
                                             " generator rows, found " + std::to_string(i));
        ++lineno;
        std::istringstream ls(text);
        std::vector<std::uint32_t> row;
        long long v;
        int col = 0;
        while (ls >> v) {
            ++col;
            if (col > n)
                parse_fail(name, lineno, col, "row has more than " + std::to_string(n) + " symbols");
            if (v < 0 || v >= q)
                parse_fail(name, lineno, col,
                           "symbol " + std::to_string(v) + " outside [0, " + std::to_string(q) + ")");
            row.push_back(static_cast<std::uint32_t>(v));
        }
        if (!ls.eof()) {
            std::string bad;
            ls.clear();
            ls >> bad;
            parse_fail(name, lineno, col + 1, "invalid symbol \"" + bad + "\"");
        }
        if (static_cast<long long>(row.size()) != n)
            parse_fail(name, lineno, "expected " + std::to_string(n) + " symbols, found " +
                                         std::to_string(row.size()));
        rows.push_back(std::move(row));
    }
    while (std::getline(in, text)) {
        ++lineno;
        if (text.find_first_not_of(" \t\r") != std::string::npos)
            parse_fail(name, lineno, "unexpected content after " + std::to_string(k) + " generator rows");
    }
    return from_generator(static_cast<std::uint32_t>(q), rows);
}

LinearCode LinearCode::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open code file");
    return parse(in, path);
}

std::uint64_t LinearCode::full_support() const {
    if (n_ > 64) throw std::invalid_argument("LinearCode: coordinate masks require n <= 64");
    return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
}

int LinearCode::dim_shortened(std::uint64_t support) const {
    const std::uint64_t full = full_support();
    if (support & ~full)
        throw std::invalid_argument("dim_shortened: support mask has bits outside [0, n)");
    const std::uint64_t outside = full & ~support;
    if (!packed_rows_.empty()) return k_ - detail::rank_gf2_columns(packed_rows_, outside);
    return k_ - detail::rank_generic_columns(gen_, outside);
}

int LinearCode::dim_shortened(std::span<const int> coords) const {
    std::uint64_t mask = 0;
    for (int c : coords) {
        if (c < 0 || c >= n_)
            throw std::invalid_argument("dim_shortened: coordinate " + std::to_string(c) +
                                        " outside [0, " + std::to_string(n_) + ")");
        mask |= std::uint64_t{1} << c;
    }
    return dim_shortened(mask);
}

std::vector<std::int8_t> all_shortened_dims(const LinearCode& code) {
    const int n = code.length();
    if (n > 20)
        throw std::invalid_argument("all_shortened_dims: n=" + std::to_string(n) +
                                    " exceeds the hard gate n <= 20");
    std::vector<std::int8_t> dims(std::size_t{1} << n);
    for (std::uint64_t mask = 0; mask < dims.size(); ++mask)
        dims[mask] = static_cast<std::int8_t>(code.dim_shortened(mask));
    return dims;
}

}  // namespace codewidth
