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

#include "progmon/sums/compress.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace progmon {

  namespace {

    constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

    class Compressor {
     public:
      explicit Compressor(Program const& p)
          : p_(p), letters_(p.alphabet.size()), elems_(p.monoid->size()) {}

      void run(SumExpr const& e, std::size_t lo, std::size_t hi) {
        if (lo >= hi) {
          return;
        }
        if (e.kind() == SumExpr::Kind::Star) {
          per_output(lo, hi, false);
        } else if (e.level() == 1) {
          per_output(lo, hi, true);
        } else {
          for (std::size_t i : marker_hits(e.marker(), e.side(), lo, hi)) {
            keep_.insert(i);
            run(e.left(), lo, i);
            run(e.right(), i + 1, hi);
          }
        }
      }

      std::vector<std::size_t> result() const {
        return {keep_.begin(), keep_.end()};
      }

     private:
      std::size_t slot(std::size_t pos, Letter a) const {
        return (pos - 1) * letters_ + a;
      }

      // First (and optionally last) instruction per (position, letter,
      // output) within [lo, hi).
      void per_output(std::size_t lo, std::size_t hi, bool also_last) {
        std::vector<std::size_t> first(p_.range * letters_ * elems_, kNone);
        std::vector<std::size_t> last(also_last ? first.size() : 0, kNone);
        for (std::size_t i = lo; i < hi; ++i) {
          auto const& ins = p_.instructions[i];
          for (Letter a = 0; a < letters_; ++a) {
            std::size_t key = slot(ins.position, a) * elems_ + ins.map[a];
            if (first[key] == kNone) {
              first[key] = i;
            }
            if (also_last) {
              last[key] = i;
            }
          }
        }
        for (auto const* v : {&first, &last}) {
          for (std::size_t i : *v) {
            if (i != kNone) {
              keep_.insert(i);
            }
          }
        }
      }

      // The instructions that can carry the forced marker occurrence.
      std::vector<std::size_t> marker_hits(Element g, Avoid side,
                                           std::size_t lo, std::size_t hi) {
        std::vector<std::size_t> hit(p_.range * letters_, kNone);
        for (std::size_t i = lo; i < hi; ++i) {
          auto const& ins = p_.instructions[i];
          for (Letter a = 0; a < letters_; ++a) {
            if (ins.map[a] != g) {
              continue;
            }
            std::size_t& h = hit[slot(ins.position, a)];
            if (h == kNone || side == Avoid::Right) {
              h = i;
            }
          }
        }
        std::vector<std::size_t> out;
        for (std::size_t i : hit) {
          if (i != kNone) {
            out.push_back(i);
          }
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
      }

      Program const&        p_;
      std::size_t           letters_;
      std::size_t           elems_;
      std::set<std::size_t> keep_;
    };

    void check_letters(SumExpr const& e, FiniteMonoid const& m) {
      for (Letter a : e.occurring()) {
        if (a >= m.size()) {
          throw InputError("SUM expression letter " + std::to_string(a)
                           + " is not an element of the program's monoid");
        }
      }
    }

  }  // namespace

  std::vector<std::size_t> compress_for_sum(Program const& p, SumExpr const& k) {
    check_letters(k, p.target());
    Compressor c(p);
    c.run(k, 0, p.length());
    return c.result();
  }

  Compression compress_program(Program const&              p,
                               std::vector<Element> const& accept,
                               BoolCombo const&            certificate,
                               Limits const&               limits) {
    std::vector<Element> acc = accept;
    std::sort(acc.begin(), acc.end());
    auto accepted = [&](Element x) {
      return std::binary_search(acc.begin(), acc.end(), x);
    };
    std::size_t const total = word_count(p.alphabet.size(), p.range);
    if (total > limits.enumeration_cap) {
      throw ResourceError("compression check needs " + std::to_string(total)
                          + " inputs, above the enumeration cap");
    }

    std::set<std::size_t> keep;
    std::size_t           level = 0;
    for (auto const& leaf : leaves(certificate)) {
      auto part = compress_for_sum(p, leaf);
      keep.insert(part.begin(), part.end());
      level = std::max(level, leaf.level());
    }
    Compression out;
    out.indices.assign(keep.begin(), keep.end());
    out.program = subprogram(p, out.indices);
    out.level   = level;
    out.direct_equivalent = true;

    for_each_word(p.alphabet.size(), p.range, [&](Word const& w) {
      limits.cancel.check();
      bool const expected = accepted(eval(p, w));
      if (evaluate(certificate, trace(p, w)) != expected) {
        throw CertificateError(
            "certificate disagrees with the accepting set",
            p.alphabet.format(w));
      }
      if (evaluate(certificate, trace(out.program, w)) != expected) {
        throw CertificateError(
            "compressed trace changes the certificate's verdict",
            p.alphabet.format(w));
      }
      if (accepted(eval(out.program, w)) != expected) {
        out.direct_equivalent = false;
      }
      ++out.words_checked;
      return true;
    });
    return out;
  }

}  // namespace progmon
