#include "pbundle/group.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

#include "pbundle/error.hpp"
#include "pbundle/kernels.hpp"

namespace pbundle {

// ---------------------------------------------------------------- FiniteGroup

FiniteGroup FiniteGroup::from_table(std::string name, std::vector<std::string> element_names,
                                    const std::vector<std::vector<Elem>>& rows) {
  const std::size_t n = element_names.size();
  if (n == 0) fail("group '" + name + "' has no elements");
  if (rows.size() != n) fail("group '" + name + "': table has wrong number of rows");
  FiniteGroup g;
  g.name_ = std::move(name);
  g.names_ = std::move(element_names);
  {
    auto sorted = g.names_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      fail("group '" + g.name_ + "': duplicate element names");
  }
  g.table_.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) fail("group '" + g.name_ + "': table row has wrong length");
    for (Elem x : row) {
      if (x < 0 || static_cast<std::size_t>(x) >= n)
        fail("group '" + g.name_ + "': table entry out of range");
      g.table_.push_back(x);
    }
  }
  g.finish();
  return g;
}

void FiniteGroup::finish() {
  const auto n = static_cast<Elem>(order());
  // identity
  std::optional<Elem> id;
  for (Elem e = 0; e < n && !id; ++e) {
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
    if (ok) id = e;
  }
  if (!id) fail("group '" + name_ + "': no identity element");
  identity_ = *id;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          fail("group '" + name_ + "': multiplication is not associative at (" + names_[a] +
               ", " + names_[b] + ", " + names_[c] + ")");
  inverse_.assign(n, -1);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b)
      if (mul(a, b) == identity_ && mul(b, a) == identity_) inverse_[a] = b;
    if (inverse_[a] < 0) fail("group '" + name_ + "': element " + names_[a] + " has no inverse");
  }
}

namespace {

std::string cycle_notation(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::string out;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == static_cast<int>(i)) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j);
      first = false;
      j = static_cast<std::size_t>(perm[j]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace

FiniteGroup FiniteGroup::from_permutations(std::string name,
                                           const std::vector<std::vector<int>>& generators) {
  std::size_t degree = 0;
  for (const auto& p : generators) degree = std::max(degree, p.size());
  auto check = [&](const std::vector<int>& p) {
    if (p.size() != degree) fail("group '" + name + "': generators have different degrees");
    std::vector<int> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      if (sorted[i] != static_cast<int>(i))
        fail("group '" + name + "': generator is not a permutation of 0.." +
             std::to_string(degree == 0 ? 0 : degree - 1));
  };
  for (const auto& p : generators) check(p);

  auto compose = [](const std::vector<int>& p, const std::vector<int>& q) {
    std::vector<int> r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
    return r;
  };
  std::vector<int> identity(degree);
  std::iota(identity.begin(), identity.end(), 0);

  std::vector<std::vector<int>> elements{identity};
  std::map<std::vector<int>, Elem> index{{identity, 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& s : generators) {
      auto next = compose(elements[head], s);
      if (index.emplace(next, static_cast<Elem>(elements.size())).second) {
        elements.push_back(std::move(next));
        if (elements.size() > 100000) fail("group '" + name + "' is too large");
      }
    }
  }
  const std::size_t n = elements.size();
  std::vector<std::string> names;
  names.reserve(n);
  for (const auto& p : elements) names.push_back(cycle_notation(p));
  std::vector<std::vector<Elem>> rows(n, std::vector<Elem>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) rows[a][b] = index.at(compose(elements[a], elements[b]));
  return from_table(std::move(name), std::move(names), rows);
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) fail("cyclic group order must be positive");
  std::vector<std::string> names;
  std::vector<std::vector<Elem>> rows(n, std::vector<Elem>(n));
  for (int a = 0; a < n; ++a) {
    names.push_back(std::to_string(a));
    for (int b = 0; b < n; ++b) rows[a][b] = (a + b) % n;
  }
  return from_table("Z" + std::to_string(n), std::move(names), rows);
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const auto na = a.order();
  const auto nb = b.order();
  std::vector<std::string> names;
  for (std::size_t x = 0; x < na; ++x)
    for (std::size_t y = 0; y < nb; ++y)
      names.push_back("(" + a.names_[x] + "," + b.names_[y] + ")");
  std::vector<std::vector<Elem>> rows(na * nb, std::vector<Elem>(na * nb));
  for (std::size_t i = 0; i < na * nb; ++i)
    for (std::size_t j = 0; j < na * nb; ++j) {
      const auto x = a.mul(static_cast<Elem>(i / nb), static_cast<Elem>(j / nb));
      const auto y = b.mul(static_cast<Elem>(i % nb), static_cast<Elem>(j % nb));
      rows[i][j] = static_cast<Elem>(static_cast<std::size_t>(x) * nb + y);
    }
  return from_table(a.name_ + "x" + b.name_, std::move(names), rows);
}

std::optional<Elem> FiniteGroup::find(std::string_view element_name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == element_name) return static_cast<Elem>(i);
  return std::nullopt;
}

bool FiniteGroup::is_abelian() const {
  const auto n = static_cast<Elem>(order());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<Elem> FiniteGroup::generated_subgroup(std::span<const Elem> gens) const {
  std::vector<bool> in(order(), false);
  std::vector<Elem> members{identity_};
  in[identity_] = true;
  for (std::size_t head = 0; head < members.size(); ++head)
    for (Elem s : gens) {
      const Elem next = mul(members[head], s);
      if (!in[next]) {
        in[next] = true;
        members.push_back(next);
      }
    }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<Elem> FiniteGroup::generators() const {
  std::vector<Elem> gens;
  std::size_t reached = 1;
  for (Elem x = 0; x < static_cast<Elem>(order()) && reached < order(); ++x) {
    auto sub = generated_subgroup(gens);
    if (std::binary_search(sub.begin(), sub.end(), x)) continue;
    gens.push_back(x);
    reached = generated_subgroup(gens).size();
  }
  return gens;
}

// ----------------------------------------------------------------------- Word

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (const auto& l : letters_)
    if (l.exponent != 1 && l.exponent != -1) fail("word letters must have exponent +1 or -1");
}

Word Word::generator(std::int32_t g, std::int32_t exponent) {
  return Word({Letter{g, exponent}});
}

Word Word::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l.exponent = -l.exponent;
  return Word(std::move(out));
}

Word Word::reduced() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (const auto& l : letters_) {
    if (!out.empty() && out.back().generator == l.generator && out.back().exponent == -l.exponent)
      out.pop_back();
    else
      out.push_back(l);
  }
  Word w;
  w.letters_ = std::move(out);
  return w;
}

Word Word::cyclically_reduced() const {
  auto letters = reduced().letters_;
  std::size_t lo = 0;
  std::size_t hi = letters.size();
  while (hi - lo >= 2 && letters[lo].generator == letters[hi - 1].generator &&
         letters[lo].exponent == -letters[hi - 1].exponent) {
    ++lo;
    --hi;
  }
  Word w;
  w.letters_.assign(letters.begin() + static_cast<std::ptrdiff_t>(lo),
                    letters.begin() + static_cast<std::ptrdiff_t>(hi));
  return w;
}

std::int64_t Word::exponent_sum(std::int32_t g) const {
  std::int64_t s = 0;
  for (const auto& l : letters_)
    if (l.generator == g) s += l.exponent;
  return s;
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> all = a.letters_;
  all.insert(all.end(), b.letters_.begin(), b.letters_.end());
  Word w;
  w.letters_ = std::move(all);
  return w.reduced();
}

// --------------------------------------------------- FinitelyPresentedGroup

FinitelyPresentedGroup::FinitelyPresentedGroup(std::vector<std::string> generators,
                                               std::vector<Word> relators)
    : generators_(std::move(generators)), relators_(std::move(relators)) {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const auto& name = generators_[i];
    if (name.empty() || !std::islower(static_cast<unsigned char>(name[0])))
      fail("generator name '" + name + "' must start with a lowercase letter");
    for (std::size_t j = 0; j < i; ++j)
      if (generators_[j] == name) fail("duplicate generator name '" + name + "'");
  }
  for (const auto& r : relators_)
    for (const auto& l : r.letters())
      if (l.generator < 0 || static_cast<std::size_t>(l.generator) >= generators_.size())
        fail("relator uses an undeclared generator");
}

std::optional<std::int32_t> FinitelyPresentedGroup::find_generator(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i] == name) return static_cast<std::int32_t>(i);
  return std::nullopt;
}

Word FinitelyPresentedGroup::parse_word(std::string_view text) const {
  std::vector<Letter> letters;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token == "1" || token == "e") continue;
    std::int32_t exponent = 1;
    if (std::isupper(static_cast<unsigned char>(token[0]))) {
      exponent = -1;
      token[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(token[0])));
    }
    auto g = find_generator(token);
    if (!g) fail("unknown generator '" + token + "' in word '" + std::string(text) + "'");
    letters.push_back({*g, exponent});
  }
  return Word(std::move(letters));
}

std::string FinitelyPresentedGroup::format_word(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& l : w.letters()) {
    if (!out.empty()) out += ' ';
    std::string name = generators_.at(l.generator);
    if (l.exponent < 0)
      name[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
    out += name;
  }
  return out;
}

// ----------------------------------------------------------------------- homs

namespace {

Elem evaluate(const FiniteGroup& g, const std::vector<Elem>& images, const Word& w) {
  Elem acc = g.identity();
  for (const auto& l : w.letters()) {
    const Elem x = images[l.generator];
    acc = g.mul(acc, l.exponent > 0 ? x : g.inv(x));
  }
  return acc;
}

bool same_presentation(const PresentationPtr& a, const PresentationPtr& b) {
  return a == b || (a && b && *a == *b);
}

bool same_group(const GroupPtr& a, const GroupPtr& b) { return a == b || (a && b && *a == *b); }

}  // namespace

PresentedHom::PresentedHom(PresentationPtr source, GroupPtr target, std::vector<Elem> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (!source_ || !target_) fail("homomorphism needs a source and a target");
  if (images_.size() != source_->generator_count())
    fail("homomorphism must give one image per generator");
  for (Elem x : images_)
    if (x < 0 || static_cast<std::size_t>(x) >= target_->order())
      fail("homomorphism image out of range");
  for (const auto& r : source_->relators())
    if (evaluate(*target_, images_, r) != target_->identity())
      throw Error(ErrorKind::verification,
                  "relator '" + source_->format_word(r) + "' does not map to the identity");
}

Elem PresentedHom::apply(const Word& w) const { return evaluate(*target_, images_, w); }

bool PresentedHom::is_trivial() const {
  return std::all_of(images_.begin(), images_.end(),
                     [&](Elem x) { return x == target_->identity(); });
}

bool PresentedHom::operator==(const PresentedHom& other) const {
  return images_ == other.images_ && same_presentation(source_, other.source_) &&
         same_group(target_, other.target_);
}

FiniteHom::FiniteHom(GroupPtr source, GroupPtr target, std::vector<Elem> table)
    : source_(std::move(source)), target_(std::move(target)), table_(std::move(table)) {
  if (!source_ || !target_) fail("homomorphism needs a source and a target");
  if (table_.size() != source_->order()) fail("homomorphism table has the wrong size");
  for (Elem x : table_)
    if (x < 0 || static_cast<std::size_t>(x) >= target_->order())
      fail("homomorphism image out of range");
  const auto n = static_cast<Elem>(source_->order());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (table_[source_->mul(a, b)] != target_->mul(table_[a], table_[b]))
        throw Error(ErrorKind::verification,
                    "map " + source_->name() + " -> " + target_->name() +
                        " is not multiplicative at (" + source_->element_name(a) + ", " +
                        source_->element_name(b) + ")");
}

FiniteHom FiniteHom::identity(GroupPtr g) {
  std::vector<Elem> table(g->order());
  std::iota(table.begin(), table.end(), 0);
  return FiniteHom(g, g, std::move(table));
}

FiniteHom FiniteHom::trivial(GroupPtr source, GroupPtr target) {
  std::vector<Elem> table(source->order(), target->identity());
  return FiniteHom(std::move(source), std::move(target), std::move(table));
}

bool FiniteHom::operator==(const FiniteHom& other) const {
  return table_ == other.table_ && same_group(source_, other.source_) &&
         same_group(target_, other.target_);
}

WordHom::WordHom(PresentationPtr source, PresentationPtr target, std::vector<Word> images)
    : source_(std::move(source)), target_(std::move(target)) {
  if (!source_ || !target_) fail("homomorphism needs a source and a target");
  if (images.size() != source_->generator_count())
    fail("homomorphism must give one image per generator");
  images_.reserve(images.size());
  for (auto& w : images) {
    for (const auto& l : w.letters())
      if (l.generator < 0 || static_cast<std::size_t>(l.generator) >= target_->generator_count())
        fail("homomorphism image uses an unknown generator");
    images_.push_back(w.reduced());
  }
}

Word WordHom::apply(const Word& w) const {
  Word acc;
  for (const auto& l : w.letters()) {
    const Word& x = images_.at(l.generator);
    acc = acc * (l.exponent > 0 ? x : x.inverse());
  }
  return acc;
}

bool WordHom::operator==(const WordHom& other) const {
  return images_ == other.images_ && same_presentation(source_, other.source_) &&
         same_presentation(target_, other.target_);
}

FiniteHom extend_hom(const GroupPtr& source, const GroupPtr& target,
                     const std::vector<std::pair<Elem, Elem>>& images) {
  const auto n = static_cast<Elem>(source->order());
  std::vector<Elem> table(n, -1);
  table[source->identity()] = target->identity();
  std::vector<std::pair<Elem, Elem>> gens;
  for (const auto& [x, y] : images) {
    if (x < 0 || x >= n || y < 0 || static_cast<std::size_t>(y) >= target->order())
      fail("homomorphism image out of range");
    gens.emplace_back(x, y);
  }
  std::vector<Elem> queue{source->identity()};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Elem x = queue[head];
    for (const auto& [s, t] : gens) {
      const Elem xs = source->mul(x, s);
      const Elem img = target->mul(table[x], t);
      if (table[xs] < 0) {
        table[xs] = img;
        queue.push_back(xs);
      } else if (table[xs] != img) {
        fail("images do not extend to a homomorphism " + source->name() + " -> " + target->name());
      }
    }
  }
  if (queue.size() != static_cast<std::size_t>(n))
    fail("given elements do not generate " + source->name());
  try {
    return FiniteHom(source, target, std::move(table));
  } catch (const Error& e) {
    fail(e.what());
  }
}

PresentedHom compose(const FiniteHom& outer, const PresentedHom& inner) {
  if (!same_group(inner.target(), outer.source())) fail("compose: target of inner is not source of outer");
  std::vector<Elem> images;
  for (Elem x : inner.images()) images.push_back(outer.apply(x));
  return PresentedHom(inner.source(), outer.target(), std::move(images));
}

FiniteHom compose(const FiniteHom& outer, const FiniteHom& inner) {
  if (!same_group(inner.target(), outer.source())) fail("compose: target of inner is not source of outer");
  std::vector<Elem> table;
  for (Elem x : inner.table()) table.push_back(outer.apply(x));
  return FiniteHom(inner.source(), outer.target(), std::move(table));
}

PresentedHom compose(const PresentedHom& outer, const WordHom& inner) {
  if (!same_presentation(inner.target(), outer.source()))
    fail("compose: target of inner is not source of outer");
  std::vector<Elem> images;
  for (const auto& w : inner.images()) images.push_back(outer.apply(w));
  return PresentedHom(inner.source(), outer.target(), std::move(images));
}

WordHom compose(const WordHom& outer, const WordHom& inner) {
  if (!same_presentation(inner.target(), outer.source()))
    fail("compose: target of inner is not source of outer");
  std::vector<Word> images;
  for (const auto& w : inner.images()) images.push_back(outer.apply(w));
  return WordHom(inner.source(), outer.target(), std::move(images));
}

WordHom identity_hom(const PresentationPtr& p) {
  std::vector<Word> images;
  for (std::size_t i = 0; i < p->generator_count(); ++i)
    images.push_back(Word::generator(static_cast<std::int32_t>(i)));
  return WordHom(p, p, std::move(images));
}

PresentedHom trivial_hom(const PresentationPtr& p, const GroupPtr& g) {
  return PresentedHom(p, g, std::vector<Elem>(p->generator_count(), g->identity()));
}

std::optional<Elem> are_conjugate(const PresentedHom& a, const PresentedHom& b) {
  if (!same_presentation(a.source(), b.source()) || !same_group(a.target(), b.target()))
    fail("are_conjugate: homomorphisms have different source or target");
  const auto& g = *a.target();
  for (Elem h = 0; h < static_cast<Elem>(g.order()); ++h) {
    bool ok = true;
    for (std::size_t i = 0; i < a.images().size() && ok; ++i)
      ok = b.images()[i] == g.conjugate(h, a.images()[i]);
    if (ok) return h;
  }
  return std::nullopt;
}

std::optional<Elem> are_conjugate(const FiniteHom& a, const FiniteHom& b) {
  if (!same_group(a.source(), b.source()) || !same_group(a.target(), b.target()))
    fail("are_conjugate: homomorphisms have different source or target");
  const auto& g = *a.target();
  for (Elem h = 0; h < static_cast<Elem>(g.order()); ++h) {
    bool ok = true;
    for (std::size_t i = 0; i < a.table().size() && ok; ++i)
      ok = b.table()[i] == g.conjugate(h, a.table()[i]);
    if (ok) return h;
  }
  return std::nullopt;
}

std::vector<PresentedHom> enumerate_homs(const PresentationPtr& p, const GroupPtr& g,
                                         const SearchBudget& budget) {
  auto images = kernels::hom_images_search(*p, *g, budget, kernels::Exec::parallel);
  std::vector<PresentedHom> out;
  out.reserve(images.size());
  for (auto& im : images) out.emplace_back(p, g, std::move(im));
  return out;
}

std::vector<HomClass> conjugacy_classes(const std::vector<PresentedHom>& homs) {
  std::vector<HomClass> classes;
  if (homs.empty()) return classes;
  const auto& g = *homs.front().target();
  std::map<std::vector<Elem>, std::size_t> index;
  for (std::size_t i = 0; i < homs.size(); ++i) index.emplace(homs[i].images(), i);
  std::vector<bool> assigned(homs.size(), false);
  for (std::size_t i = 0; i < homs.size(); ++i) {
    if (assigned[i]) continue;
    HomClass cls;
    cls.representative = i;
    for (Elem h = 0; h < static_cast<Elem>(g.order()); ++h) {
      std::vector<Elem> conj;
      for (Elem x : homs[i].images()) conj.push_back(g.conjugate(h, x));
      auto it = index.find(conj);
      if (it == index.end())
        throw Error(ErrorKind::verification, "hom list is not closed under conjugation");
      if (!assigned[it->second]) {
        assigned[it->second] = true;
        cls.members.push_back(it->second);
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

HomClassification conjugacy_classes_of_homs(const PresentationPtr& p, const GroupPtr& g,
                                            const SearchBudget& budget) {
  HomClassification out;
  out.homs = enumerate_homs(p, g, budget);
  out.classes = conjugacy_classes(out.homs);
  return out;
}

// --------------------------------------------------------------------- Tietze

SimplifiedPresentation simplify(const FinitelyPresentedGroup& p) {
  const auto n = static_cast<std::int32_t>(p.generator_count());
  // Substitution of each original generator in terms of original generators;
  // eliminated generators are rewritten away as we go.
  std::vector<Word> subst;
  for (std::int32_t i = 0; i < n; ++i) subst.push_back(Word::generator(i));
  std::vector<bool> alive(n, true);
  std::vector<Word> relators;
  for (const auto& r : p.relators()) relators.push_back(r.cyclically_reduced());

  auto substitute = [](const Word& w, std::int32_t gen, const Word& value) {
    Word out;
    for (const auto& l : w.letters()) {
      if (l.generator == gen)
        out = out * (l.exponent > 0 ? value : value.inverse());
      else
        out = out * Word::generator(l.generator, l.exponent);
    }
    return out;
  };

  for (;;) {
    relators.erase(std::remove_if(relators.begin(), relators.end(),
                                  [](const Word& w) { return w.empty(); }),
                   relators.end());
    // Shortest relator with a generator occurring exactly once.
    std::optional<std::size_t> best_rel;
    std::int32_t best_gen = -1;
    for (std::size_t ri = 0; ri < relators.size(); ++ri) {
      const auto& r = relators[ri];
      if (best_rel && relators[*best_rel].size() <= r.size()) continue;
      std::map<std::int32_t, int> count;
      for (const auto& l : r.letters()) ++count[l.generator];
      for (const auto& [gen, c] : count)
        if (c == 1) {
          best_rel = ri;
          best_gen = gen;
          break;
        }
    }
    if (!best_rel) break;
    const Word r = relators[*best_rel];
    relators.erase(relators.begin() + static_cast<std::ptrdiff_t>(*best_rel));
    // r = u x^e v  =>  x^e = u^-1 v^-1
    std::vector<Letter> u;
    std::vector<Letter> v;
    std::int32_t e = 1;
    bool seen = false;
    for (const auto& l : r.letters()) {
      if (l.generator == best_gen) {
        e = l.exponent;
        seen = true;
      } else {
        (seen ? v : u).push_back(l);
      }
    }
    Word value = Word(u).inverse() * Word(v).inverse();
    if (e < 0) value = value.inverse();
    for (auto& rel : relators) rel = substitute(rel, best_gen, value).cyclically_reduced();
    for (auto& s : subst) s = substitute(s, best_gen, value);
    alive[best_gen] = false;
  }

  std::vector<std::int32_t> renumber(n, -1);
  std::vector<std::string> names;
  for (std::int32_t i = 0; i < n; ++i)
    if (alive[i]) {
      renumber[i] = static_cast<std::int32_t>(names.size());
      names.push_back(p.generators()[i]);
    }
  auto rename = [&](const Word& w) {
    std::vector<Letter> letters;
    for (const auto& l : w.letters()) letters.push_back({renumber.at(l.generator), l.exponent});
    return Word(std::move(letters));
  };
  std::vector<Word> new_relators;
  for (const auto& r : relators) {
    auto w = rename(r);
    if (std::find(new_relators.begin(), new_relators.end(), w) == new_relators.end())
      new_relators.push_back(std::move(w));
  }
  SimplifiedPresentation out{FinitelyPresentedGroup(std::move(names), std::move(new_relators)), {}};
  for (const auto& s : subst) out.substitution.push_back(rename(s));
  return out;
}

GroupOrder presented_order(const FinitelyPresentedGroup& p) {
  const auto s = simplify(p);
  if (s.group.generator_count() == 0) return {GroupOrder::Kind::finite, 1};
  if (s.group.generator_count() > 1) return {GroupOrder::Kind::unknown, 0};
  std::int64_t g = 0;
  for (const auto& r : s.group.relators()) g = std::gcd(g, r.exponent_sum(0));
  if (g == 0) return {GroupOrder::Kind::infinite, 0};
  return {GroupOrder::Kind::finite, static_cast<std::uint64_t>(g < 0 ? -g : g)};
}

}  // namespace pbundle
