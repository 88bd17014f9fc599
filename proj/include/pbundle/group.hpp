#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pbundle/search_budget.hpp"

namespace pbundle {

/// Index of an element inside a FiniteGroup.
using Elem = std::int32_t;

/// A finite group stored as a full multiplication table.
///
/// Elements are the indices 0..order()-1 in a fixed order; every loader
/// (tables, permutation generators, products) validates the group axioms
/// exhaustively before handing out a value.
class FiniteGroup {
public:
  /// `rows[a][b]` is the index of a*b. Throws on any axiom violation.
  static FiniteGroup from_table(std::string name, std::vector<std::string> element_names,
                                const std::vector<std::vector<Elem>>& rows);

  /// Closure of one-line permutations of 0..k-1. Product convention:
  /// (p*q)(i) = q(p(i)). Elements are listed identity first, then in
  /// breadth-first order of right multiplication by the generators.
  static FiniteGroup from_permutations(std::string name,
                                       const std::vector<std::vector<int>>& generators);

  static FiniteGroup cyclic(int n);
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

  const std::string& name() const { return name_; }
  std::size_t order() const { return names_.size(); }
  Elem identity() const { return identity_; }
  Elem mul(Elem a, Elem b) const { return table_[static_cast<std::size_t>(a) * order() + b]; }
  Elem inv(Elem a) const { return inverse_[a]; }
  /// h * x * h^-1
  Elem conjugate(Elem h, Elem x) const { return mul(mul(h, x), inv(h)); }

  const std::string& element_name(Elem a) const { return names_.at(a); }
  const std::vector<std::string>& element_names() const { return names_; }
  std::optional<Elem> find(std::string_view element_name) const;

  bool is_abelian() const;
  /// Sorted element list of the subgroup generated by `gens`.
  std::vector<Elem> generated_subgroup(std::span<const Elem> gens) const;
  /// A small generating set, chosen greedily in element order.
  std::vector<Elem> generators() const;
  const std::vector<Elem>& table() const { return table_; }

  bool operator==(const FiniteGroup& other) const {
    return names_ == other.names_ && table_ == other.table_;
  }

private:
  FiniteGroup() = default;
  void finish();

  std::string name_;
  std::vector<std::string> names_;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  Elem identity_ = 0;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

struct Letter {
  std::int32_t generator = 0;
  std::int32_t exponent = 1;  // +1 or -1
  bool operator==(const Letter&) const = default;
};

/// A word in the generators of a presented group. Words are compared
/// letter by letter; `reduced()` gives the free normal form.
class Word {
public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);
  static Word generator(std::int32_t g, std::int32_t exponent = 1);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Word inverse() const;
  Word reduced() const;
  Word cyclically_reduced() const;
  std::int64_t exponent_sum(std::int32_t g) const;

  /// Concatenation followed by free reduction.
  friend Word operator*(const Word& a, const Word& b);
  bool operator==(const Word&) const = default;

private:
  std::vector<Letter> letters_;
};

/// Generators plus relator words. Generator names start with a lowercase
/// letter; in the text syntax a token whose first letter is uppercase is the
/// inverse of the generator with the lowercased first letter ("a b A").
class FinitelyPresentedGroup {
public:
  FinitelyPresentedGroup() = default;
  FinitelyPresentedGroup(std::vector<std::string> generators, std::vector<Word> relators);

  std::size_t generator_count() const { return generators_.size(); }
  const std::vector<std::string>& generators() const { return generators_; }
  const std::vector<Word>& relators() const { return relators_; }
  std::optional<std::int32_t> find_generator(std::string_view name) const;

  Word parse_word(std::string_view text) const;
  std::string format_word(const Word& w) const;

  bool operator==(const FinitelyPresentedGroup&) const = default;

private:
  std::vector<std::string> generators_;
  std::vector<Word> relators_;
};

using PresentationPtr = std::shared_ptr<const FinitelyPresentedGroup>;

/// Homomorphism from a presented group into a finite group, given by the
/// images of the generators. Construction checks every relator.
class PresentedHom {
public:
  PresentedHom(PresentationPtr source, GroupPtr target, std::vector<Elem> images);

  const PresentationPtr& source() const { return source_; }
  const GroupPtr& target() const { return target_; }
  const std::vector<Elem>& images() const { return images_; }
  Elem image(std::int32_t generator) const { return images_.at(generator); }
  Elem apply(const Word& w) const;
  bool is_trivial() const;

  bool operator==(const PresentedHom& other) const;

private:
  PresentationPtr source_;
  GroupPtr target_;
  std::vector<Elem> images_;
};

/// Homomorphism between finite groups stored as a full table.
class FiniteHom {
public:
  FiniteHom(GroupPtr source, GroupPtr target, std::vector<Elem> table);
  static FiniteHom identity(GroupPtr g);
  static FiniteHom trivial(GroupPtr source, GroupPtr target);

  const GroupPtr& source() const { return source_; }
  const GroupPtr& target() const { return target_; }
  const std::vector<Elem>& table() const { return table_; }
  Elem apply(Elem x) const { return table_.at(x); }

  bool operator==(const FiniteHom& other) const;

private:
  GroupPtr source_;
  GroupPtr target_;
  std::vector<Elem> table_;
};

/// Homomorphism between presented groups, given on generators. Relators are
/// not checked here (no word problem); callers verify through finite targets.
class WordHom {
public:
  WordHom(PresentationPtr source, PresentationPtr target, std::vector<Word> images);

  const PresentationPtr& source() const { return source_; }
  const PresentationPtr& target() const { return target_; }
  const std::vector<Word>& images() const { return images_; }
  Word apply(const Word& w) const;

  bool operator==(const WordHom& other) const;

private:
  PresentationPtr source_;
  PresentationPtr target_;
  std::vector<Word> images_;
};

/// The homomorphism with the given images on a generating set, extended by
/// closure. Throws when the pairs do not generate the source or do not
/// extend to a homomorphism.
FiniteHom extend_hom(const GroupPtr& source, const GroupPtr& target,
                     const std::vector<std::pair<Elem, Elem>>& images);

PresentedHom compose(const FiniteHom& outer, const PresentedHom& inner);
FiniteHom compose(const FiniteHom& outer, const FiniteHom& inner);
PresentedHom compose(const PresentedHom& outer, const WordHom& inner);
WordHom compose(const WordHom& outer, const WordHom& inner);

WordHom identity_hom(const PresentationPtr& p);
PresentedHom trivial_hom(const PresentationPtr& p, const GroupPtr& g);

/// First h (in element order) with b(x) = h a(x) h^-1 on every generator.
std::optional<Elem> are_conjugate(const PresentedHom& a, const PresentedHom& b);
std::optional<Elem> are_conjugate(const FiniteHom& a, const FiniteHom& b);

/// All homomorphisms P -> G, ordered lexicographically by the tuple of
/// generator images (generator 0 most significant).
std::vector<PresentedHom> enumerate_homs(const PresentationPtr& p, const GroupPtr& g,
                                         const SearchBudget& budget = SearchBudget::from_env());

struct HomClass {
  std::size_t representative = 0;          // index into the enumeration
  std::vector<std::size_t> members;        // ascending
};

/// Partition of `homs` (one source, one target) into conjugacy classes.
/// Classes are ordered by their representative, which is the first member.
std::vector<HomClass> conjugacy_classes(const std::vector<PresentedHom>& homs);

struct HomClassification {
  std::vector<PresentedHom> homs;
  std::vector<HomClass> classes;
};
HomClassification conjugacy_classes_of_homs(const PresentationPtr& p, const GroupPtr& g,
                                            const SearchBudget& budget = SearchBudget::from_env());

/// Result of Tietze generator elimination.
struct SimplifiedPresentation {
  FinitelyPresentedGroup group;
  /// Image of each original generator as a word in the new generators.
  std::vector<Word> substitution;
};

/// Repeatedly removes a generator that occurs exactly once in some
/// cyclically reduced relator, substituting it everywhere else. The result
/// presents an isomorphic group.
SimplifiedPresentation simplify(const FinitelyPresentedGroup& p);

struct GroupOrder {
  enum class Kind { finite, infinite, unknown };
  Kind kind = Kind::unknown;
  std::uint64_t value = 0;
};

/// Order of a presented group when simplification leaves at most one
/// generator; `unknown` otherwise.
GroupOrder presented_order(const FinitelyPresentedGroup& p);

}  // namespace pbundle
