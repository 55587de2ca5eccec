/*
 *   Copyright 2026 The progmon Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * @file
 *
 * Finite monoids given by explicit multiplication tables.
 */

#ifndef PROGMON_ALGEBRA_MONOID_HPP
#define PROGMON_ALGEBRA_MONOID_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "progmon/error.hpp"

namespace progmon {

  using Element = std::uint32_t;

  /// A finite monoid stored as a dense row-major table. Immutable once
  /// built; the public constructor checks range, identity laws and
  /// associativity.
  class FiniteMonoid {
   public:
    /// The trivial monoid.
    FiniteMonoid() : size_(1), identity_(0), table_{0}, names_{"1"} {}
    FiniteMonoid(std::vector<std::vector<Element>> table,
                 Element                           identity,
                 std::vector<std::string>          names = {});

    /// Builds from a flat table without the O(n^3) associativity check. For
    /// constructions that are associative by definition (products, quotients,
    /// transition monoids).
    static FiniteMonoid trusted(std::size_t              size,
                                std::vector<Element>     flat_table,
                                Element                  identity,
                                std::vector<std::string> names = {});

    static FiniteMonoid trivial();
    /// Z_n written additively; element i is the residue i.
    static FiniteMonoid cyclic_group(std::size_t n);
    /// {1, 0} with 0 absorbing.
    static FiniteMonoid u1();

    std::size_t size() const noexcept {
      return size_;
    }
    Element identity() const noexcept {
      return identity_;
    }

    /// Unchecked product.
    Element operator()(Element a, Element b) const noexcept {
      return table_[static_cast<std::size_t>(a) * size_ + b];
    }
    /// Checked product; throws InputError for out-of-range indices.
    Element multiply(Element a, Element b) const;
    Element product(std::span<Element const> elements) const;
    Element power(Element x, std::size_t k) const;
    bool    is_idempotent(Element x) const {
      return (*this)(x, x) == x;
    }

    std::string const&              name(Element x) const;
    std::vector<std::string> const& names() const noexcept {
      return names_;
    }
    std::vector<Element> const& flat_table() const noexcept {
      return table_;
    }

    /// Returns a description of the first violated monoid law, if any.
    std::optional<std::string> check_laws() const;

    bool operator==(FiniteMonoid const& other) const {
      return size_ == other.size_ && identity_ == other.identity_
             && table_ == other.table_;
    }

   private:
    std::size_t              size_     = 0;
    Element                  identity_ = 0;
    std::vector<Element>     table_;
    std::vector<std::string> names_;
  };

  using MonoidPtr = std::shared_ptr<FiniteMonoid const>;

  inline MonoidPtr share(FiniteMonoid m) {
    return std::make_shared<FiniteMonoid const>(std::move(m));
  }

  Element multiply(FiniteMonoid const& m, Element a, Element b);

  /// Smallest t >= 1 such that s^t is idempotent for every element s.
  std::size_t idempotent_power(FiniteMonoid const& m);

  /// Componentwise product. The pair (x, y) has index x * |N| + y.
  FiniteMonoid direct_product(FiniteMonoid const& m,
                              FiniteMonoid const& n,
                              Limits const&       limits = default_limits());

  struct Submonoid {
    FiniteMonoid         monoid;
    std::vector<Element> embedding;  // new index -> old index
  };

  /// Closure of `generators` together with the identity. New indices follow
  /// increasing order of the old ones.
  Submonoid generated_submonoid(FiniteMonoid const&         m,
                                std::vector<Element> const& generators);

  /// Sorted closure of `generators` and the identity, as old indices.
  std::vector<Element> closure(FiniteMonoid const&         m,
                               std::vector<Element> const& generators);

  /// Table isomorphism. Returns the map M -> N when one exists.
  std::optional<std::vector<Element>> find_isomorphism(FiniteMonoid const& m,
                                                       FiniteMonoid const& n);

  inline bool isomorphic(FiniteMonoid const& m, FiniteMonoid const& n) {
    return find_isomorphism(m, n).has_value();
  }

  /// Checks that `map` is a monoid morphism M -> N.
  bool is_morphism(FiniteMonoid const&         m,
                   FiniteMonoid const&         n,
                   std::vector<Element> const& map);

}  // namespace progmon

#endif  // PROGMON_ALGEBRA_MONOID_HPP
