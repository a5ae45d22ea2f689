#include "rwords/partition.hpp"

#include <stdexcept>

namespace rwords {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw std::invalid_argument("negative part");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("parts not weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (int p : parts_) size_ += p;
}

std::vector<long> Partition::shifted_parts(int k) const {
    if (k < num_parts()) throw std::invalid_argument("k smaller than number of parts");
    std::vector<long> h(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i) h[static_cast<std::size_t>(i) - 1] = part(i) + k - i;
    return h;
}

namespace {

// Builds parts from the smallest (last padded position) upward so the
// emission order is colex ascending on the padded vectors.
void emit_partitions(int remaining, int slots, int min_part, int max_part,
                     std::vector<int>& acc, std::vector<Partition>& out) {
    if (slots == 1) {
        if (remaining >= min_part && remaining <= max_part) {
            std::vector<int> parts;
            parts.reserve(acc.size() + 1);
            parts.push_back(remaining);
            for (auto it = acc.rbegin(); it != acc.rend(); ++it) parts.push_back(*it);
            out.emplace_back(std::move(parts));
        }
        return;
    }
    const int hi = std::min(remaining / slots, max_part);
    for (int v = min_part; v <= hi; ++v) {
        if (remaining - v > (slots - 1) * max_part) continue;
        acc.push_back(v);
        emit_partitions(remaining - v, slots - 1, v, max_part, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(int n, int max_parts, int max_part) {
    if (n < 0 || max_parts < 1) throw std::invalid_argument("bad enumeration bounds");
    if (max_part < 0) max_part = n;
    std::vector<Partition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> acc;
    emit_partitions(n, max_parts, 0, max_part, acc, out);
    return out;
}

Int syt_count(const Partition& shape) {
    const int m = shape.num_parts();
    if (m == 0) return 1;
    const auto h = shape.shifted_parts(m);
    Int vandermonde(1);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) vandermonde *= Int(h[i] - h[j]);
    Int num = factorial(static_cast<unsigned long>(shape.size())) * vandermonde;
    Int den(1);
    for (long hi : h) den *= factorial(static_cast<unsigned long>(hi));
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw std::logic_error("syt_count: non-integral hook ratio");
    return q;
}

} // namespace rwords
