#include "jacq/character.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace jacq {

bool CharacterSpec::operator<(const CharacterSpec& o) const {
  if (order != o.order) return order < o.order;
  if (genus != o.genus) return genus < o.genus;
  return counts < o.counts;
}

CharacterSpec character_from_exponents(int order, std::vector<int> exps) {
  if (order < 1) throw std::invalid_argument("character order must be >= 1");
  CharacterSpec chi;
  chi.order = order;
  chi.counts.assign(order, 0);
  for (int a : exps) {
    int r = ((a % order) + order) % order;
    ++chi.counts[r];
  }
  chi.genus = static_cast<int>(exps.size());
  return chi;
}

std::vector<int> exponents(const CharacterSpec& chi) {
  std::vector<int> out;
  for (int a = 0; a < chi.order; ++a)
    for (int i = 0; i < chi.counts[a]; ++i) out.push_back(a);
  return out;
}

CharacterSpec power(const CharacterSpec& chi, long d) {
  int N = chi.order;
  long dd = ((d % N) + N) % N;
  int g = std::gcd(static_cast<long>(N), dd);
  int M = N / g;
  CharacterSpec out;
  out.order = M;
  out.genus = chi.genus;
  out.counts.assign(M, 0);
  for (int a = 0; a < N; ++a) {
    if (chi.counts[a] == 0) continue;
    int e = static_cast<int>((static_cast<long>(a) * dd) % N);  // multiple of g
    out.counts[e / g] += chi.counts[a];
  }
  return out;
}

CharacterSpec conjugate(const CharacterSpec& chi) {
  CharacterSpec out = chi;
  for (int a = 1; a < chi.order; ++a) out.counts[chi.order - a] = chi.counts[a];
  return out;
}

Cyc trace_h01(const CharacterSpec& chi) {
  Cyc t(chi.order);
  for (int a = 0; a < chi.order; ++a) {
    if (chi.counts[a] == 0) continue;
    t = t + Cyc::rational(chi.order, Rat(chi.counts[a])) * Cyc::root(chi.order, a);
  }
  return t;
}

Cyc trace_h1(const CharacterSpec& chi) {
  Cyc t = trace_h01(chi);
  return t + t.conj();
}

bool is_faithful(const CharacterSpec& chi) {
  int g = chi.order;  // exponent 0 contributes the full order
  for (int a = 1; a < chi.order; ++a)
    if (chi.counts[a] > 0) g = std::gcd(g, a);
  bool nontrivial = false;
  for (int a = 0; a < chi.order; ++a)
    if (chi.counts[a] > 0) nontrivial = true;
  if (chi.order == 1) return nontrivial;
  return nontrivial && std::gcd(g, chi.order) == 1;
}

Rat age(const CharacterSpec& chi) {
  long s = 0;
  for (int a = 0; a < chi.order; ++a) s += static_cast<long>(a) * chi.counts[a];
  return Rat(s, chi.order);
}

CharacterSpec parse_character(const std::string& text) {
  // expected shape: N=12:[1,3,5]
  std::string s;
  for (char c : text)
    if (!isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.rfind("N=", 0) != 0) throw std::invalid_argument("character: expected 'N=...'");
  size_t colon = s.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("character: expected ':'");
  int order = std::stoi(s.substr(2, colon - 2));
  if (order < 1) throw std::invalid_argument("character: order must be positive");
  std::string list = s.substr(colon + 1);
  if (list.size() < 2 || list.front() != '[' || list.back() != ']')
    throw std::invalid_argument("character: expected '[a,b,...]'");
  std::vector<int> exps;
  std::stringstream ss(list.substr(1, list.size() - 2));
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) exps.push_back(std::stoi(item));
  return character_from_exponents(order, exps);
}

std::string format_character(const CharacterSpec& chi) {
  std::ostringstream os;
  os << "N=" << chi.order << ":[";
  bool first = true;
  for (int a : exponents(chi)) {
    if (!first) os << ",";
    os << a;
    first = false;
  }
  os << "]";
  return os.str();
}

}  // namespace jacq
