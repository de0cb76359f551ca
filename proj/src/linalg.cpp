#include "reisner/linalg.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>

namespace reisner {

namespace {

// One-step Bareiss: all intermediate entries are minors of the input, so for
// a ±1 matrix the Hadamard bound k^(k/2) controls their size.
template <typename T>
int rank_bareiss(std::vector<std::vector<T>> m) {
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int r = 0;
    T prev = 1;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[r], m[pivot]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j)
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

int rank_mod_p(const IntMatrix& in, long long p) {
    int rows = static_cast<int>(in.size());
    int cols = rows ? static_cast<int>(in[0].size()) : 0;
    std::vector<std::vector<long long>> m(rows, std::vector<long long>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m[i][j] = ((in[i][j] % p) + p) % p;

    auto inv_mod = [p](long long a) {
        long long result = 1, base = a % p, e = p - 2;
        while (e) {
            if (e & 1) result = result * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return result;
    };

    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[r], m[pivot]);
        long long inv = inv_mod(m[r][c]);
        for (int j = c; j < cols; ++j) m[r][j] = m[r][j] * inv % p;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            long long f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] = ((m[i][j] - f * m[r][j]) % p + p) % p;
        }
        ++r;
    }
    return r;
}

} // namespace

int exact_rank(const IntMatrix& m, const FieldSpec& field) {
    if (m.empty() || m[0].empty()) return 0;
    if (!field.is_rationals()) return rank_mod_p(m, field.p);

    int k = std::min(m.size(), m[0].size());
    if (k <= 24) {
        // Hadamard: minors of a ±1 matrix stay below 24^12 < 2^63.
        std::vector<std::vector<long long>> w(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) w[i].assign(m[i].begin(), m[i].end());
        return rank_bareiss(std::move(w));
    }
    std::vector<std::vector<boost::multiprecision::cpp_int>> w(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) w[i].assign(m[i].begin(), m[i].end());
    return rank_bareiss(std::move(w));
}

} // namespace reisner
