#pragma once

#include "contx/errors.hpp"

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace contx {

using Elem = std::int64_t;

// Finite sequence of positive integers (a_1, ..., a_t). The empty sequence
// is valid. Elements are validated once at construction.
class Sequence {
public:
    Sequence() = default;
    explicit Sequence(std::vector<Elem> elems);
    Sequence(std::initializer_list<Elem> elems);

    static Sequence repeated(Elem value, std::int64_t count);
    // Parses "2,4,5,1,1"; the empty string yields the empty sequence.
    static Sequence parse(const std::string& csv);

    std::int64_t size() const { return static_cast<std::int64_t>(elems_.size()); }
    bool empty() const { return elems_.empty(); }

    Elem at1(std::int64_t i) const; // 1-based, bounds-checked
    Elem operator[](std::size_t i) const { return elems_[i]; }

    const std::vector<Elem>& elems() const { return elems_; }
    std::vector<Elem>::const_iterator begin() const { return elems_.begin(); }
    std::vector<Elem>::const_iterator end() const { return elems_.end(); }

    Sequence reversed() const;
    // 1-based inclusive slice; lo > hi yields the empty sequence.
    Sequence sub1(std::int64_t lo, std::int64_t hi) const;
    Sequence drop_first() const;
    Sequence drop_last() const;
    Sequence concat(const Sequence& other) const;

    Elem sum() const;
    Elem min_element() const;
    Elem max_element() const;

    bool operator==(const Sequence&) const = default;
    bool operator<(const Sequence& o) const { return elems_ < o.elems_; }

    std::string str() const; // "(2,4,5,1,1)"

private:
    std::vector<Elem> elems_;
};

} // namespace contx
