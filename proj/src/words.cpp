#include "cathei/words.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "cathei/error.hpp"

namespace cathei {

std::string Generator::str() const { return (kind == GenKind::F ? "F" : "E") + std::to_string(color); }

Generator Generator::parse(const std::string& token) {
  if (token.size() < 2 || (token[0] != 'F' && token[0] != 'E'))
    throw Error(ErrorCode::SyntaxError, "expected generator like F3 or E-1, got '" + token + "'");
  std::size_t used = 0;
  int color = 0;
  try {
    color = std::stoi(token.substr(1), &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used + 1 != token.size()) throw Error(ErrorCode::SyntaxError, "bad generator color in '" + token + "'");
  return {token[0] == 'F' ? GenKind::F : GenKind::E, color};
}

std::string GenWord::str() const {
  std::string out;
  for (const auto& g : gens) out += g.str() + " ";
  return out + "@ " + source.str();
}

GenWord GenWord::parse(const std::string& text) {
  std::istringstream is(text);
  std::string tok;
  GenWord w;
  bool at = false;
  while (is >> tok) {
    if (tok == "@") {
      if (!(is >> tok)) throw Error(ErrorCode::SyntaxError, "missing partition after '@'");
      w.source = Partition::parse(tok);
      at = true;
      if (is >> tok) throw Error(ErrorCode::SyntaxError, "trailing token '" + tok + "'");
      break;
    }
    w.gens.push_back(Generator::parse(tok));
  }
  if (!at) throw Error(ErrorCode::SyntaxError, "word needs '@ <partition>'");
  return w;
}

std::vector<std::optional<Partition>> word_region_labels(const GenWord& w) {
  std::vector<std::optional<Partition>> out(w.gens.size() + 1);
  std::optional<Partition> cur = w.source;
  out[w.gens.size()] = cur;
  for (std::size_t k = w.gens.size(); k-- > 0;) {
    if (cur) cur = w.gens[k].kind == GenKind::F ? add_box(*cur, w.gens[k].color) : remove_box(*cur, w.gens[k].color);
    out[k] = cur;
  }
  return out;
}

std::optional<Partition> word_apply(const GenWord& w) { return word_region_labels(w).front(); }

std::optional<GenWord> word_normal_form(const GenWord& w) {
  auto target = word_apply(w);
  if (!target) return std::nullopt;
  std::map<int, int> net;  // content -> boxes gained
  for (int c : contents_multiset(*target)) ++net[c];
  for (int c : contents_multiset(w.source)) --net[c];
  std::vector<Generator> removals, additions;  // in order of application
  Partition cur = w.source;
  for (bool progress = true; progress;) {
    progress = false;
    for (int c : removable(cur))
      if (net[c] < 0) {
        cur = *remove_box(cur, c);
        ++net[c];
        removals.push_back(E(c));
        progress = true;
        break;
      }
  }
  for (bool progress = true; progress;) {
    progress = false;
    for (int c : addable(cur))
      if (net[c] > 0) {
        cur = *add_box(cur, c);
        --net[c];
        additions.push_back(F(c));
        progress = true;
        break;
      }
  }
  for (const auto& [c, v] : net)
    if (v != 0) throw Error(ErrorCode::CrosscheckFailed, "no F...E form for " + w.str());
  GenWord out{w.source, {}};
  out.gens.assign(additions.rbegin(), additions.rend());
  out.gens.insert(out.gens.end(), removals.rbegin(), removals.rend());
  return out;
}

std::vector<GenWord> valid_words(int max_size, int max_len) {
  std::vector<GenWord> out;
  for (const auto& lam : partitions_up_to(max_size)) {
    std::vector<GenWord> layer{GenWord{lam, {}}};
    out.push_back(layer.front());
    for (int k = 0; k < max_len; ++k) {
      std::vector<GenWord> next;
      for (const auto& w : layer) {
        Partition cur = *word_apply(w);
        std::vector<Generator> opts;
        for (int c : addable(cur)) opts.push_back(F(c));
        for (int c : removable(cur)) opts.push_back(E(c));
        for (Generator g : opts) {
          GenWord v = w;
          v.gens.insert(v.gens.begin(), g);
          next.push_back(std::move(v));
        }
      }
      out.insert(out.end(), next.begin(), next.end());
      layer = std::move(next);
    }
  }
  return out;
}

}  // namespace cathei
