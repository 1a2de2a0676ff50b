#include "ordvec/gallery.hpp"

#include <algorithm>
#include <charconv>

#include "ordvec/error.hpp"

namespace ordvec {

std::string to_string(Basis b) {
  switch (b) {
    case Basis::published_example: return "published_example";
    case Basis::by_inspection: return "by_inspection";
    case Basis::cross_checked: return "cross_checked";
  }
  return "?";
}

std::vector<std::size_t> GalleryInstance::failing() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < expectations.size(); ++i) {
    if (!expectations[i].check(space)) out.push_back(i);
  }
  return out;
}

namespace {

bool norm_equals(const MajorizedSpace& s, const RVector& v, const Rational& want) {
  NormResult r = norm_p(s, v);
  return r.finite() && *r.value == want;
}

bool incoherent_with(const MajorizedSpace& s, const RVector& t) {
  return !check_coherent(s).coherent && verify_incoherence_witness(s, t);
}

std::size_t parse_size(const std::string& text) {
  std::size_t n = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
  if (ec != std::errc() || p != text.data() + text.size()) throw InvalidInput("bad size in gallery name: " + text);
  return n;
}

}  // namespace

GalleryInstance make_delta_instance(std::size_t n) {
  if (n == 0) throw InvalidInput("delta instance needs n >= 1");
  PositiveSet m;
  for (std::size_t i = 0; i < n; ++i) m.vectors.push_back(RVector::unit(n, i));
  GalleryInstance g{"delta-" + std::to_string(n), MajorizedSpace(Cone::orthant(n), m), {}, {}, {}, {}};

  RVector mixed(n);
  for (std::size_t i = 0; i < n; ++i) {
    long k = static_cast<long>(i) + 1;
    mixed[i] = Rational(i % 2 == 0 ? k : -k, 2);
  }
  g.vectors = {RVector::unit(n, 0), mixed};
  if (n == 2) {
    g.vectors.push_back(RVector{1, -2});
    g.expectations.push_back({"p_M((1,-2)) = 3", Basis::published_example,
                              [](const MajorizedSpace& s) { return norm_equals(s, RVector{1, -2}, 3); }});
  }
  g.expectations.push_back({"p_M(e_1) = 1", Basis::by_inspection,
                            [n](const MajorizedSpace& s) { return norm_equals(s, RVector::unit(n, 0), 1); }});
  g.expectations.push_back({"p_M equals the l1 norm on the sample vectors", Basis::cross_checked,
                            [vs = g.vectors](const MajorizedSpace& s) {
                              return std::all_of(vs.begin(), vs.end(),
                                                 [&](const RVector& v) { return norm_equals(s, v, v.l1()); });
                            }});
  g.expectations.push_back({"coherent with phi = (1,...,1)", Basis::by_inspection, [n](const MajorizedSpace& s) {
                              return check_coherent(s).coherent &&
                                     verify_coherence_certificate(s, RVector::constant(n, 1));
                            }});
  g.functionals = {RVector::constant(n, 1)};
  return g;
}

std::vector<std::string> free_group_ball(std::size_t radius) {
  static constexpr char letters[] = {'a', 'A', 'b', 'B'};
  auto inverse_of = [](char c) { return static_cast<char>(c ^ 0x20); };
  std::vector<std::string> words{""};
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= radius; ++len) {
    std::size_t level_end = words.size();
    for (std::size_t w = level_begin; w < level_end; ++w) {
      for (char c : letters) {
        if (!words[w].empty() && words[w].back() == inverse_of(c)) continue;
        words.push_back(words[w] + c);
      }
    }
    level_begin = level_end;
  }
  words.front() = "e";
  return words;
}

RVector f2_witness() { return RVector{1, -1, -1}; }

GalleryInstance make_f2_ball_instance(std::size_t radius) {
  if (radius < 2) throw InvalidInput("free-group ball instance needs radius >= 2");
  std::vector<std::string> words = free_group_ball(radius);
  const std::size_t n = words.size();
  auto starts = [](const std::string& w, const char* prefix) { return w.rfind(prefix, 0) == 0; };
  // a^-1 A is every reduced word not starting with a^-1; b A the words starting "ba".
  RVector shifted(n), b_shifted(n), a_words(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!starts(words[i], "A")) shifted[i] = 1;
    if (starts(words[i], "ba")) b_shifted[i] = 1;
    if (starts(words[i], "a")) a_words[i] = 1;
  }
  PositiveSet m{{shifted, b_shifted, a_words}};
  GalleryInstance g{"f2-ball-" + std::to_string(radius), MajorizedSpace(Cone::orthant(n), m), {}, words, {}, {}};
  g.expectations.push_back({"incoherent; (1,-1,-1) is a witness", Basis::published_example,
                            [](const MajorizedSpace& s) { return incoherent_with(s, f2_witness()); }});
  g.expectations.push_back({"f(e) = 1", Basis::published_example, [](const MajorizedSpace& s) {
                              return s.combination(f2_witness())[0] == Rational(1);
                            }});
  return g;
}

std::vector<GalleryInstance> make_lex_instances() {
  std::vector<GalleryInstance> out;

  GalleryInstance single{"lex-single", MajorizedSpace(Cone::lex2(), PositiveSet{{RVector{1, 0}}}), {}, {}, {}, {}};
  single.vectors = {RVector{0, 1}, RVector{1, 0}};
  single.expectations.push_back({"p_M((0,1)) = 0, not attained", Basis::published_example, [](const MajorizedSpace& s) {
                                   NormResult r = norm_p(s, RVector{0, 1});
                                   return r.finite() && r.value->is_zero() && !r.attained;
                                 }});
  single.expectations.push_back({"p_M((1,0)) = 1", Basis::by_inspection,
                                 [](const MajorizedSpace& s) { return norm_equals(s, RVector{1, 0}, 1); }});
  out.push_back(std::move(single));

  GalleryInstance pair{"lex-pair", MajorizedSpace(Cone::lex2(), PositiveSet{{RVector{1, 1}, RVector{0, 1}}}), {}, {}, {}, {}};
  pair.expectations.push_back({"incoherent; (1,-2) is a witness", Basis::published_example,
                               [](const MajorizedSpace& s) { return incoherent_with(s, RVector{1, -2}); }});
  out.push_back(std::move(pair));
  return out;
}

std::vector<std::string> gallery_names() {
  return {"delta-2", "delta-3", "delta-5", "f2-ball-2", "f2-ball-3", "f2-ball-4", "lex-single", "lex-pair"};
}

GalleryInstance make_gallery_instance(const std::string& name) {
  if (name.rfind("delta-", 0) == 0) return make_delta_instance(parse_size(name.substr(6)));
  if (name.rfind("f2-ball-", 0) == 0) return make_f2_ball_instance(parse_size(name.substr(8)));
  for (auto& g : make_lex_instances()) {
    if (g.name == name) return std::move(g);
  }
  throw InvalidInput("unknown gallery instance: " + name);
}

TruncationRule delta_rule(std::size_t dim) {
  return [dim](std::size_t k) {
    if (k == 0 || k > dim) throw InvalidInput("delta rule index out of range");
    return RVector::unit(dim, k - 1);
  };
}

TruncationRule tilted_rule() {
  return [](std::size_t k) { return RVector{1, Rational(1, static_cast<long>(k))}; };
}

TruncationRule approaching_rule() {
  return [](std::size_t k) { return RVector{1, Rational(static_cast<long>(k), static_cast<long>(k + 1))}; };
}

TruncationResult truncation_sequence(const TruncationRule& rule, std::size_t count, const RVector& v) {
  const std::size_t dim = v.dim();
  TruncationResult out;
  PositiveSet m;
  for (std::size_t k = 1; k <= count; ++k) {
    RVector mk = rule(k);
    require_dim(mk.dim(), dim, "truncation rule output");
    m.vectors.push_back(std::move(mk));
    NormResult r = norm_p(MajorizedSpace(Cone::orthant(dim), m), v);
    out.values.push_back(r.value);
  }
  for (std::size_t k = 1; k < out.values.size(); ++k) {
    const auto& prev = out.values[k - 1];
    const auto& cur = out.values[k];
    if (!cur ? prev.has_value() : (prev && *cur > *prev)) out.nonincreasing = false;
  }
  if (!out.values.empty() && out.values.back()) {
    std::size_t k = out.values.size();
    while (k > 1 && out.values[k - 2] == out.values.back()) --k;
    out.stable_from = k;
  }
  return out;
}

}  // namespace ordvec
