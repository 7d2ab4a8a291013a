#include "permrep/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace permrep {

namespace {

bool is_separator(char c) { return c == ' ' || c == '\t' || c == ',' || c == '\n' || c == '\r'; }

void validate_bijection(const std::vector<int>& values) {
  const int n = static_cast<int>(values.size());
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : values) {
    if (v < 1 || v > n)
      throw std::invalid_argument("value " + std::to_string(v) + " out of range 1.." +
                                  std::to_string(n));
    if (seen[static_cast<std::size_t>(v - 1)])
      throw std::invalid_argument("duplicate value " + std::to_string(v));
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  validate_bijection(values_);
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::reverse_identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n - i;
  return Permutation(std::move(v));
}

Permutation parse_permutation(const std::string& text) {
  std::size_t b = 0, e = text.size();
  while (b < e && is_separator(text[b])) ++b;
  while (e > b && is_separator(text[e - 1])) --e;
  const std::string trimmed = text.substr(b, e - b);

  if (trimmed.empty()) throw std::invalid_argument("empty permutation text (the empty permutation is \"e\")");
  if (trimmed == "e") return Permutation{};

  const bool has_sep = std::any_of(trimmed.begin(), trimmed.end(), is_separator);
  auto parse_token = [](const std::string& tok) {
    if (!std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw std::invalid_argument("malformed permutation token '" + tok + "'");
    if (tok.size() > 9) throw std::invalid_argument("permutation value too large: '" + tok + "'");
    return std::stoi(tok);
  };

  std::vector<int> values;
  if (!has_sep && std::all_of(trimmed.begin(), trimmed.end(),
                              [](char c) { return c >= '1' && c <= '9'; })) {
    for (char c : trimmed) values.push_back(c - '0');  // compact form, n <= 9
  } else if (!has_sep) {
    values.push_back(parse_token(trimmed));
  } else {
    std::size_t i = 0;
    while (i < trimmed.size()) {
      while (i < trimmed.size() && is_separator(trimmed[i])) ++i;
      if (i >= trimmed.size()) break;
      std::size_t j = i;
      while (j < trimmed.size() && !is_separator(trimmed[j])) ++j;
      values.push_back(parse_token(trimmed.substr(i, j - i)));
      i = j;
    }
  }
  return Permutation(std::move(values));
}

std::string format_permutation(const Permutation& p, PermStyle style) {
  if (p.empty()) return "e";
  std::string out;
  if (style == PermStyle::Compact) {
    if (p.size() > 9)
      throw std::invalid_argument("compact style requires length <= 9, got " +
                                  std::to_string(p.size()));
    for (int v : p.values()) out.push_back(static_cast<char>('0' + v));
  } else {
    for (int i = 0; i < p.size(); ++i) {
      if (i) out.push_back(' ');
      out += std::to_string(p.values()[static_cast<std::size_t>(i)]);
    }
  }
  return out;
}

std::string to_string(const Permutation& p) {
  return format_permutation(p, p.size() <= 9 ? PermStyle::Compact : PermStyle::Separated);
}

Permutation normalize(const std::vector<int>& entries) {
  const int n = static_cast<int>(entries.size());
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return entries[static_cast<std::size_t>(a)] < entries[static_cast<std::size_t>(b)]; });
  std::vector<int> out(static_cast<std::size_t>(n), 0);
  for (int rank = 0; rank < n; ++rank) {
    const int idx = order[static_cast<std::size_t>(rank)];
    if (rank > 0 && entries[static_cast<std::size_t>(order[static_cast<std::size_t>(rank - 1)])] ==
                        entries[static_cast<std::size_t>(idx)])
      throw std::invalid_argument("duplicate entry " + std::to_string(entries[static_cast<std::size_t>(idx)]));
    out[static_cast<std::size_t>(idx)] = rank + 1;
  }
  return Permutation(std::move(out));
}

Permutation reverse_complement(const Permutation& p) {
  const int n = p.size();
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    out[static_cast<std::size_t>(i)] = n + 1 - p.values()[static_cast<std::size_t>(n - 1 - i)];
  return Permutation(std::move(out));
}

std::vector<int> extrema_positions(const Permutation& p, ExtremaKind kind) {
  const int n = p.size();
  std::vector<int> out;
  auto scan = [&](bool from_left, bool minima) {
    int best = 0;
    bool first = true;
    auto consider = [&](int pos) {
      const int v = p.at(pos);
      if (first || (minima ? v < best : v > best)) {
        best = v;
        first = false;
        out.push_back(pos);
      }
    };
    if (from_left)
      for (int pos = 1; pos <= n; ++pos) consider(pos);
    else
      for (int pos = n; pos >= 1; --pos) consider(pos);
    if (!from_left) std::reverse(out.begin(), out.end());
  };
  switch (kind) {
    case ExtremaKind::LeftRightMin: scan(true, true); break;
    case ExtremaKind::LeftRightMax: scan(true, false); break;
    case ExtremaKind::RightLeftMin: scan(false, true); break;
    case ExtremaKind::RightLeftMax: scan(false, false); break;
  }
  return out;
}

namespace {

void occurrences_rec(const std::vector<int>& vals, const std::vector<int>& pat, int next_pos,
                     std::vector<int>& chosen, std::vector<std::vector<int>>& out) {
  const int m = static_cast<int>(pat.size());
  const int t = static_cast<int>(chosen.size());
  if (t == m) {
    out.push_back(chosen);
    return;
  }
  const int n = static_cast<int>(vals.size());
  // Not enough room for the remaining pattern entries.
  for (int pos = next_pos; pos <= n - (m - t) + 1; ++pos) {
    bool ok = true;
    for (int a = 0; a < t && ok; ++a) {
      const bool lt_v = vals[static_cast<std::size_t>(pos - 1)] <
                        vals[static_cast<std::size_t>(chosen[static_cast<std::size_t>(a)] - 1)];
      const bool lt_p = pat[static_cast<std::size_t>(t)] < pat[static_cast<std::size_t>(a)];
      ok = (lt_v == lt_p);
    }
    if (!ok) continue;
    chosen.push_back(pos);
    occurrences_rec(vals, pat, pos + 1, chosen, out);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> occurrences(const Permutation& p, const Permutation& pattern) {
  if (pattern.size() > 6)
    throw std::invalid_argument("pattern length " + std::to_string(pattern.size()) +
                                " exceeds the supported bound 6");
  std::vector<std::vector<int>> out;
  std::vector<int> chosen;
  occurrences_rec(p.values(), pattern.values(), 1, chosen, out);
  return out;
}

bool contains(const Permutation& p, const Permutation& pattern) {
  return !occurrences(p, pattern).empty();
}

bool avoids(const Permutation& p, const Permutation& pattern) { return !contains(p, pattern); }

StarString::StarString(std::vector<int> entries) : entries_(std::move(entries)) {
  std::vector<int> ints;
  for (int e : entries_) {
    if (e < 0) throw std::invalid_argument("star string entries must be positive or the star");
    if (e > 0) ints.push_back(e);
  }
  std::sort(ints.begin(), ints.end());
  if (std::adjacent_find(ints.begin(), ints.end()) != ints.end())
    throw std::invalid_argument("star string integers must be pairwise distinct");
}

StarString StarString::parse(const std::string& text) {
  std::vector<int> entries;
  const bool has_sep = std::any_of(text.begin(), text.end(), is_separator);
  if (has_sep) {
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && is_separator(text[i])) ++i;
      if (i >= text.size()) break;
      std::size_t j = i;
      while (j < text.size() && !is_separator(text[j])) ++j;
      const std::string tok = text.substr(i, j - i);
      if (tok == "*") {
        entries.push_back(kStar);
      } else if (std::all_of(tok.begin(), tok.end(),
                             [](unsigned char c) { return std::isdigit(c); })) {
        entries.push_back(std::stoi(tok));
      } else {
        throw std::invalid_argument("malformed star string token '" + tok + "'");
      }
      i = j;
    }
  } else {
    for (char c : text) {
      if (c == '*')
        entries.push_back(kStar);
      else if (c >= '1' && c <= '9')
        entries.push_back(c - '0');
      else
        throw std::invalid_argument(std::string("malformed star string character '") + c + "'");
    }
  }
  return StarString(std::move(entries));
}

int StarString::star_count() const {
  return static_cast<int>(std::count(entries_.begin(), entries_.end(), kStar));
}

std::string StarString::text() const {
  const bool compact = std::all_of(entries_.begin(), entries_.end(), [](int e) { return e <= 9; });
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!compact && i) out.push_back(' ');
    if (entries_[i] == kStar)
      out.push_back('*');
    else if (compact)
      out.push_back(static_cast<char>('0' + entries_[i]));
    else
      out += std::to_string(entries_[i]);
  }
  return out;
}

namespace {

void star_occurrences_rec(const StarString& s, const StarString& pat, int next_pos,
                          std::vector<int>& chosen, std::vector<std::vector<int>>& out) {
  const int m = pat.size();
  const int t = static_cast<int>(chosen.size());
  if (t == m) {
    out.push_back(chosen);
    return;
  }
  const int n = s.size();
  for (int pos = next_pos; pos <= n - (m - t) + 1; ++pos) {
    const bool pat_star = pat.is_star(t + 1);
    if (pat_star != s.is_star(pos)) continue;
    bool ok = true;
    if (!pat_star) {
      for (int a = 0; a < t && ok; ++a) {
        if (pat.is_star(a + 1)) continue;
        const bool lt_v = s.at(pos) < s.at(chosen[static_cast<std::size_t>(a)]);
        const bool lt_p = pat.at(t + 1) < pat.at(a + 1);
        ok = (lt_v == lt_p);
      }
    }
    if (!ok) continue;
    chosen.push_back(pos);
    star_occurrences_rec(s, pat, pos + 1, chosen, out);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> star_occurrences(const StarString& s, const StarString& pattern) {
  std::vector<std::vector<int>> out;
  std::vector<int> chosen;
  star_occurrences_rec(s, pattern, 1, chosen, out);
  return out;
}

MonotoneResult monotone_kind(const Permutation& p) {
  const int n = p.size();
  bool id = true, rid = true;
  for (int i = 1; i <= n; ++i) {
    id = id && p.at(i) == i;
    rid = rid && p.at(i) == n + 1 - i;
  }
  if (id && rid) return {MonotoneKind::Both, n};
  if (id) return {MonotoneKind::Identity, n};
  if (rid) return {MonotoneKind::ReverseIdentity, n};
  return {MonotoneKind::Neither, n};
}

bool is_identity(const Permutation& p) {
  const auto k = monotone_kind(p).kind;
  return k == MonotoneKind::Identity || k == MonotoneKind::Both;
}

bool is_reverse_identity(const Permutation& p) {
  const auto k = monotone_kind(p).kind;
  return k == MonotoneKind::ReverseIdentity || k == MonotoneKind::Both;
}

}  // namespace permrep
