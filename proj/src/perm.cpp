#include "twistdec/perm.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace twistdec {

Permutation::Permutation(int degree) {
  if (degree < 0) throw InputError("permutation degree must be nonnegative");
  images_.resize(degree);
  for (int i = 0; i < degree; ++i) images_[i] = i + 1;
}

Permutation Permutation::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  std::vector<char> seen(n + 1, 0);
  for (int v : images) {
    if (v < 1 || v > n) {
      throw InputError("image value " + std::to_string(v) +
                       " out of range 1.." + std::to_string(n));
    }
    if (seen[v]) throw InputError("repeated image value " + std::to_string(v));
    seen[v] = 1;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::compose(const Permutation& then) const {
  if (degree() != then.degree())
    throw InputError("compose: degree mismatch");
  std::vector<int> out(images_.size());
  for (size_t i = 0; i < images_.size(); ++i)
    out[i] = then.images_[images_[i] - 1];
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> out(images_.size());
  for (size_t i = 0; i < images_.size(); ++i)
    out[images_[i] - 1] = static_cast<int>(i) + 1;
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

int Permutation::fix_count() const {
  int c = 0;
  for (size_t i = 0; i < images_.size(); ++i)
    if (images_[i] == static_cast<int>(i) + 1) ++c;
  return c;
}

bool Permutation::is_identity() const {
  return fix_count() == degree();
}

std::string Permutation::to_cycles() const {
  const int n = degree();
  std::vector<char> done(n + 1, 0);
  std::string out;
  for (int s = 1; s <= n; ++s) {
    if (done[s] || images_[s - 1] == s) continue;
    out += '(';
    int x = s;
    bool first = true;
    do {
      if (!first) out += ',';
      out += std::to_string(x);
      done[x] = 1;
      x = images_[x - 1];
      first = false;
    } while (x != s);
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

std::string Permutation::to_list() const {
  std::string out = "[";
  for (size_t i = 0; i < images_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(images_[i]);
  }
  out += ']';
  return out;
}

namespace {

// Parses "12, 5 7" style integer runs out of body, rejecting junk.
std::vector<int> parse_int_list(std::string_view body, std::string_view what) {
  std::vector<int> vals;
  size_t i = 0;
  while (i < body.size()) {
    char c = body[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError(std::string(what) + ": unexpected character '" + c + "'");
    int v = 0;
    while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) {
      v = v * 10 + (body[i] - '0');
      ++i;
    }
    vals.push_back(v);
  }
  return vals;
}

}  // namespace

Permutation Permutation::parse(std::string_view text, int degree) {
  size_t a = 0, b = text.size();
  while (a < b && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
  text = text.substr(a, b - a);
  if (text.empty()) throw ParseError("empty permutation text");

  if (text.front() == '[') {
    if (text.back() != ']') throw ParseError("image list missing ']'");
    auto vals = parse_int_list(text.substr(1, text.size() - 2), "image list");
    if (static_cast<int>(vals.size()) != degree)
      throw ParseError("image list has " + std::to_string(vals.size()) +
                       " entries, expected " + std::to_string(degree));
    return from_images(std::move(vals));
  }

  if (text.front() != '(')
    throw ParseError("permutation must start with '(' or '['");
  std::vector<int> images(degree);
  for (int i = 0; i < degree; ++i) images[i] = i + 1;
  std::vector<char> moved(degree + 1, 0);
  size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation");
    size_t close = text.find(')', i);
    if (close == std::string_view::npos) throw ParseError("unclosed cycle");
    auto pts = parse_int_list(text.substr(i + 1, close - i - 1), "cycle");
    i = close + 1;
    if (pts.empty()) continue;  // "()" names the identity
    if (pts.size() == 1) throw ParseError("cycle of length 1");
    for (int p : pts) {
      if (p < 1 || p > degree)
        throw ParseError("cycle point " + std::to_string(p) +
                         " out of range 1.." + std::to_string(degree));
      if (moved[p])
        throw ParseError("point " + std::to_string(p) +
                         " appears in two cycles");
      moved[p] = 1;
    }
    for (size_t k = 0; k < pts.size(); ++k)
      images[pts[k] - 1] = pts[(k + 1) % pts.size()];
  }
  return from_images(std::move(images));
}

int hamming_distance(const Permutation& g, const Permutation& h) {
  if (g.degree() != h.degree())
    throw InputError("hamming_distance: degree mismatch");
  int d = 0;
  for (int x = 1; x <= g.degree(); ++x)
    if (g.apply(x) != h.apply(x)) ++d;
  return d;
}

Word::Word(std::vector<int> syms, int alphabet_size) : alphabet(alphabet_size) {
  for (int s : syms) {
    if (s < 1 || s > alphabet)
      throw InputError("word symbol " + std::to_string(s) +
                       " out of range 1.." + std::to_string(alphabet));
  }
  symbols = std::move(syms);
}

int hamming_distance(const Word& a, const Word& b) {
  if (a.symbols.size() != b.symbols.size())
    throw InputError("hamming_distance: word length mismatch");
  int d = 0;
  for (size_t i = 0; i < a.symbols.size(); ++i)
    if (a.symbols[i] != b.symbols[i]) ++d;
  return d;
}

Word parse_word(std::string_view text, int alphabet) {
  std::vector<int> syms;
  for (char c : text) {
    if (c == '[' || c == ']' || std::isspace(static_cast<unsigned char>(c)))
      continue;
    if (c == '|' || c == ',' || std::isdigit(static_cast<unsigned char>(c)))
      continue;
    throw ParseError(std::string("word: unexpected character '") + c + "'");
  }
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      int v = 0;
      while (i < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      syms.push_back(v);
    } else {
      ++i;
    }
  }
  if (syms.empty()) throw ParseError("empty word");
  return Word(std::move(syms), alphabet);
}

std::string format_word(const Word& w, int component_length) {
  std::string out = "[";
  for (int i = 0; i < w.length(); ++i) {
    if (i) out += (component_length > 0 && i % component_length == 0) ? " | " : ",";
    out += std::to_string(w.symbols[i]);
  }
  out += ']';
  return out;
}

}  // namespace twistdec
