#include "segal/multi_index.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace segal {

MultiIndex::MultiIndex(int size) {
    if (size < 0) throw std::invalid_argument("MultiIndex: negative length");
    exp_.assign(static_cast<std::size_t>(size), 0);
}

MultiIndex::MultiIndex(std::initializer_list<int> exponents) : exp_(exponents) { validate(); }

MultiIndex::MultiIndex(std::vector<int> exponents) : exp_(std::move(exponents)) { validate(); }

void MultiIndex::validate() const {
    for (int e : exp_)
        if (e < 0) throw std::invalid_argument("MultiIndex: negative exponent");
}

int MultiIndex::order() const { return std::accumulate(exp_.begin(), exp_.end(), 0); }

Integer MultiIndex::factorial() const {
    Integer f = 1;
    for (int e : exp_) f *= segal::factorial(static_cast<unsigned int>(e));
    return f;
}

bool MultiIndex::leq(const MultiIndex& other) const {
    if (size() != other.size()) throw std::invalid_argument("MultiIndex::leq: length mismatch");
    for (std::size_t i = 0; i < exp_.size(); ++i)
        if (exp_[i] > other.exp_[i]) return false;
    return true;
}

MultiIndex MultiIndex::minus_unit(int j) const {
    if (j < 0 || j >= size()) throw std::invalid_argument("MultiIndex::minus_unit: index out of range");
    if (exp_[static_cast<std::size_t>(j)] == 0)
        throw std::invalid_argument("MultiIndex::minus_unit: entry " + std::to_string(j) + " is zero");
    MultiIndex r = *this;
    --r.exp_[static_cast<std::size_t>(j)];
    return r;
}

MultiIndex MultiIndex::plus_unit(int j) const {
    if (j < 0 || j >= size()) throw std::invalid_argument("MultiIndex::plus_unit: index out of range");
    MultiIndex r = *this;
    ++r.exp_[static_cast<std::size_t>(j)];
    return r;
}

MultiIndex MultiIndex::concat(const MultiIndex& other) const {
    std::vector<int> e = exp_;
    e.insert(e.end(), other.exp_.begin(), other.exp_.end());
    return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::slice(int from, int length) const {
    if (from < 0 || length < 0 || from + length > size())
        throw std::invalid_argument("MultiIndex::slice: range out of bounds");
    return MultiIndex(std::vector<int>(exp_.begin() + from, exp_.begin() + from + length));
}

std::string MultiIndex::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < exp_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(exp_[i]);
    }
    return s + ")";
}

bool operator<(const MultiIndex& a, const MultiIndex& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.exp_.begin(), a.exp_.end(), b.exp_.begin(), b.exp_.end());
}

namespace {

void fill_of_order(int size, int order, std::vector<int>& prefix, std::vector<MultiIndex>& out) {
    if (static_cast<int>(prefix.size()) == size - 1) {
        prefix.push_back(order);
        out.emplace_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int e = 0; e <= order; ++e) {
        prefix.push_back(e);
        fill_of_order(size, order - e, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<MultiIndex> indices_of_order(int size, int order) {
    if (size < 0 || order < 0) throw std::invalid_argument("indices_of_order: negative argument");
    if (size == 0) return order == 0 ? std::vector<MultiIndex>{MultiIndex(0)} : std::vector<MultiIndex>{};
    std::vector<MultiIndex> out;
    std::vector<int> prefix;
    fill_of_order(size, order, prefix, out);
    return out;
}

std::vector<MultiIndex> indices_up_to_order(int size, int max_order) {
    std::vector<MultiIndex> out;
    for (int k = 0; k <= max_order; ++k) {
        auto layer = indices_of_order(size, k);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

std::vector<MultiIndex> indices_below(const MultiIndex& beta) {
    std::vector<MultiIndex> out;
    std::vector<int> cur(static_cast<std::size_t>(beta.size()), 0);
    while (true) {
        out.emplace_back(cur);
        int j = beta.size() - 1;
        while (j >= 0 && cur[static_cast<std::size_t>(j)] == beta[j]) {
            cur[static_cast<std::size_t>(j)] = 0;
            --j;
        }
        if (j < 0) break;
        ++cur[static_cast<std::size_t>(j)];
    }
    std::sort(out.begin(), out.end());
    return out;
}

Integer binomial_product(const MultiIndex& beta, const MultiIndex& gamma) {
    if (!gamma.leq(beta)) throw std::invalid_argument("binomial_product: gamma exceeds beta");
    Integer b = 1;
    for (int i = 0; i < beta.size(); ++i)
        b *= binomial(static_cast<unsigned int>(beta[i]), static_cast<unsigned int>(gamma[i]));
    return b;
}

}  // namespace segal
