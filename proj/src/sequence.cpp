#include "contx/sequence.hpp"

#include <algorithm>
#include <sstream>

namespace contx {

namespace {

void check_elements(const std::vector<Elem>& elems) {
    for (Elem e : elems) {
        if (e < 1) throw domain_error("sequence elements must be >= 1");
    }
}

} // namespace

Sequence::Sequence(std::vector<Elem> elems) : elems_(std::move(elems)) {
    check_elements(elems_);
}

Sequence::Sequence(std::initializer_list<Elem> elems) : elems_(elems) {
    check_elements(elems_);
}

Sequence Sequence::repeated(Elem value, std::int64_t count) {
    if (count < 0) throw domain_error("repetition count must be >= 0");
    return Sequence(std::vector<Elem>(static_cast<std::size_t>(count), value));
}

Sequence Sequence::parse(const std::string& csv) {
    std::vector<Elem> elems;
    std::string token;
    std::istringstream in(csv);
    while (std::getline(in, token, ',')) {
        if (token.empty()) throw domain_error("empty element in sequence literal");
        std::size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(token, &pos);
        } catch (const std::exception&) {
            throw domain_error("malformed sequence element: " + token);
        }
        if (pos != token.size()) throw domain_error("malformed sequence element: " + token);
        elems.push_back(v);
    }
    return Sequence(std::move(elems));
}

Elem Sequence::at1(std::int64_t i) const {
    if (i < 1 || i > size()) throw domain_error("sequence index out of range");
    return elems_[static_cast<std::size_t>(i - 1)];
}

Sequence Sequence::reversed() const {
    Sequence out = *this;
    std::reverse(out.elems_.begin(), out.elems_.end());
    return out;
}

Sequence Sequence::sub1(std::int64_t lo, std::int64_t hi) const {
    if (lo < 1 || hi > size()) throw domain_error("sequence slice out of range");
    Sequence out;
    if (lo <= hi) {
        out.elems_.assign(elems_.begin() + (lo - 1), elems_.begin() + hi);
    }
    return out;
}

Sequence Sequence::drop_first() const {
    return empty() ? Sequence() : sub1(2, size());
}

Sequence Sequence::drop_last() const {
    return empty() ? Sequence() : sub1(1, size() - 1);
}

Sequence Sequence::concat(const Sequence& other) const {
    Sequence out = *this;
    out.elems_.insert(out.elems_.end(), other.elems_.begin(), other.elems_.end());
    return out;
}

Elem Sequence::sum() const {
    Elem s = 0;
    for (Elem e : elems_) s += e;
    return s;
}

Elem Sequence::min_element() const {
    if (empty()) throw domain_error("min_element of empty sequence");
    return *std::min_element(elems_.begin(), elems_.end());
}

Elem Sequence::max_element() const {
    if (empty()) throw domain_error("max_element of empty sequence");
    return *std::max_element(elems_.begin(), elems_.end());
}

std::string Sequence::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(elems_[i]);
    }
    out += ')';
    return out;
}

} // namespace contx
