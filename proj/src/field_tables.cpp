#include "frobgram/field_tables.hpp"

#include <limits>
#include <map>
#include <mutex>
#include <utility>

namespace frobgram {

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

FieldElement find_primitive(const FieldPtr& field, std::uint64_t order) {
    const auto factors = prime_factors(order);
    const FieldElement one = FieldElement::one(field);
    const auto q = field->q.convert_to<std::uint64_t>();
    for (std::uint64_t i = 1; i < q; ++i) {
        FieldElement candidate = FieldElement::from_index(field, i);
        bool primitive = true;
        for (auto r : factors) {
            if (power(candidate, Integer(order / r)) == one) {
                primitive = false;
                break;
            }
        }
        if (primitive) return candidate;
    }
    throw Error(Errc::InvalidArgument, "multiplicative group has no generator");  // unreachable
}

}  // namespace

FieldTables::FieldTables(FieldPtr field) : field_(std::move(field)) {
    if (field_->q > std::numeric_limits<std::uint32_t>::max() / 2)
        throw Error(Errc::BudgetExceeded, "field too large for lookup tables: q = " + field_->q.str());
    p_ = field_->p;
    q_ = field_->q.convert_to<std::uint32_t>();
    order_ = q_ - 1;

    log_.assign(q_, kNoLog);
    exp_.assign(2 * static_cast<std::size_t>(order_) + 1, 0);

    const FieldElement g = find_primitive(field_, order_);
    FieldElement current = FieldElement::one(field_);
    for (std::uint32_t i = 0; i < order_; ++i) {
        const auto idx = static_cast<Element>(current.index());
        exp_[i] = idx;
        exp_[i + order_] = idx;
        log_[idx] = i;
        current *= g;
    }
    exp_[2 * static_cast<std::size_t>(order_)] = exp_[0];

    zech_.assign(order_, kNoLog);
    for (std::uint32_t n = 0; n < order_; ++n) {
        const Element e = exp_[n];
        const std::uint32_t digit = e % p_;
        const Element plus_one = e - digit + (digit + 1) % p_;
        zech_[n] = plus_one == 0 ? kNoLog : log_[plus_one];
    }
    minus_one_ = p_ - 1;  // the constant p - 1 of the prime field
}

std::shared_ptr<const FieldTables> FieldTables::get(const FieldPtr& field) {
    static std::mutex mutex;
    static std::map<std::pair<std::uint32_t, unsigned>, std::shared_ptr<const FieldTables>> cache;
    const auto key = std::make_pair(field->p, field->k);
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    auto tables = std::make_shared<const FieldTables>(field);
    std::lock_guard lock(mutex);
    return cache.emplace(key, std::move(tables)).first->second;
}

}  // namespace frobgram
