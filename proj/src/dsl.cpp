#include "cathei/dsl.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <vector>

namespace cathei {

SyntaxError::SyntaxError(int line, int column, const std::string& expected, const std::string& detail)
    : Error(ErrorCode::SyntaxError, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": expected " +
                                        expected + (detail.empty() ? "" : " (" + detail + ")")),
      line_(line),
      column_(column),
      expected_(expected) {}

namespace {

struct Token {
  std::string text;
  int col;
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t k = 0;
  while (k < line.size()) {
    if (line[k] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[k]))) {
      ++k;
      continue;
    }
    std::size_t start = k;
    while (k < line.size() && !std::isspace(static_cast<unsigned char>(line[k])) && line[k] != '#') ++k;
    out.push_back({line.substr(start, k - start), static_cast<int>(start) + 1});
  }
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int no = 0;
    while (std::getline(is, line)) {
      ++no;
      auto t = tokenize(line);
      if (!t.empty()) lines_.push_back({no, std::move(t), static_cast<int>(line.size()) + 1});
    }
    last_line_ = no + 1;
  }

  Diagram run() {
    if (lines_.empty()) throw SyntaxError(last_line_, 1, "'kind'", "empty input");
    const Line& first = lines_[0];
    keyword(first, 0, "kind");
    want_count(first, 2, "A or H");
    const std::string& k = first.toks[1].text;
    if (k == "A") return parse_a();
    if (k == "H") return parse_h();
    throw SyntaxError(first.no, first.toks[1].col, "A or H", "got '" + k + "'");
  }

 private:
  struct Line {
    int no;
    std::vector<Token> toks;
    int end_col;
  };

  std::vector<Line> lines_;
  int last_line_ = 1;

  static void keyword(const Line& l, std::size_t k, const std::string& kw) {
    if (l.toks[k].text != kw) throw SyntaxError(l.no, l.toks[k].col, "'" + kw + "'", "got '" + l.toks[k].text + "'");
  }

  static void want_count(const Line& l, std::size_t n, const std::string& what) {
    if (l.toks.size() < n) throw SyntaxError(l.no, l.end_col, what, "line ends early");
    if (l.toks.size() > n) throw SyntaxError(l.no, l.toks[n].col, "end of line", "unexpected '" + l.toks[n].text + "'");
  }

  static int integer(const Line& l, std::size_t k, const std::string& what) {
    const std::string& s = l.toks[k].text;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (...) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw SyntaxError(l.no, l.toks[k].col, what, "got '" + s + "'");
    return v;
  }

  static int sign(const Line& l, std::size_t k) {
    const std::string& s = l.toks[k].text;
    if (s == "+") return +1;
    if (s == "-") return -1;
    throw SyntaxError(l.no, l.toks[k].col, "'+' or '-'", "got '" + s + "'");
  }

  // position token of a slice line checked against the current strand count
  static int position(const Line& l, bool cup, int strands) {
    int p = integer(l, 2, "position");
    int hi = cup ? strands + 1 : strands - 1;
    if (p < 1 || p > hi) {
      std::string range = hi < 1 ? "no valid position" : "position in 1.." + std::to_string(hi);
      throw SyntaxError(l.no, l.toks[2].col, range, "position out of range");
    }
    return p;
  }

  static std::string slice_kind(const Line& l) {
    keyword(l, 0, "slice");
    if (l.toks.size() < 2) throw SyntaxError(l.no, l.end_col, "cross, cap or cup", "line ends early");
    const std::string& k = l.toks[1].text;
    if (k != "cross" && k != "cap" && k != "cup")
      throw SyntaxError(l.no, l.toks[1].col, "cross, cap or cup", "got '" + k + "'");
    return k;
  }

  LayeredDiagram parse_a() {
    if (lines_.size() < 2) throw SyntaxError(last_line_, 1, "'source'", "missing header");
    const Line& src = lines_[1];
    keyword(src, 0, "source");
    if (src.toks.size() < 2) throw SyntaxError(src.no, src.end_col, "word", "line ends early");
    std::string rest;
    for (std::size_t k = 1; k < src.toks.size(); ++k) rest += src.toks[k].text + " ";
    LayeredDiagram d;
    try {
      d.bottom = GenWord::parse(rest);
    } catch (const std::exception& e) {
      throw SyntaxError(src.no, src.toks[1].col, "word like 'F3 E0 @ 3,2'", e.what());
    }
    for (std::size_t k = 2; k < lines_.size(); ++k) {
      const Line& l = lines_[k];
      std::string kind = slice_kind(l);
      int strands = static_cast<int>(d.levels().back().size());
      if (kind == "cup") {
        want_count(l, 5, "position, color and orientation");
        d.slices.push_back(ASlice::cup(position(l, true, strands), integer(l, 3, "color"), sign(l, 4)));
      } else {
        want_count(l, 3, "position");
        int p = position(l, false, strands);
        d.slices.push_back(kind == "cross" ? ASlice::cross(p) : ASlice::cap(p));
      }
      check(l, [&] { d.levels(); });
    }
    return d;
  }

  HDiagram parse_h() {
    HDiagram d;
    std::optional<int> signs_line, base_line;
    std::size_t k = 1;
    for (; k < lines_.size() && k < 3; ++k) {
      const Line& l = lines_[k];
      const std::string& h = l.toks[0].text;
      if (h == "signs" && !signs_line) {
        if (l.toks.size() > 2) throw SyntaxError(l.no, l.toks[2].col, "end of line", "unexpected '" + l.toks[2].text + "'");
        if (l.toks.size() == 2)
          for (std::size_t c = 0; c < l.toks[1].text.size(); ++c) {
            char ch = l.toks[1].text[c];
            if (ch != '+' && ch != '-')
              throw SyntaxError(l.no, l.toks[1].col + static_cast<int>(c), "'+' or '-'", std::string("got '") + ch + "'");
            d.signs.push_back(ch == '+' ? +1 : -1);
          }
        signs_line = l.no;
      } else if (h == "base" && !base_line) {
        want_count(l, 2, "base region");
        d.base = integer(l, 1, "base region");
        if (d.base < 0) throw SyntaxError(l.no, l.toks[1].col, "nonnegative base region", "");
        base_line = l.no;
      } else {
        throw SyntaxError(l.no, l.toks[0].col, signs_line ? "'base'" : base_line ? "'signs'" : "'signs' or 'base'",
                          "got '" + h + "'");
      }
    }
    if (!signs_line || !base_line)
      throw SyntaxError(last_line_, 1, signs_line ? "'base'" : "'signs'", "missing header");
    for (; k < lines_.size(); ++k) {
      const Line& l = lines_[k];
      std::string kind = slice_kind(l);
      int strands = static_cast<int>(d.levels().back().size());
      if (kind == "cup") {
        want_count(l, 4, "position and orientation");
        d.slices.push_back(HSlice::cup(position(l, true, strands), sign(l, 3)));
      } else {
        want_count(l, 3, "position");
        int p = position(l, false, strands);
        d.slices.push_back(kind == "cross" ? HSlice::cross(p) : HSlice::cap(p));
      }
      check(l, [&] { d.levels(); });
    }
    return d;
  }

  template <typename F>
  static void check(const Line& l, F f) {
    try {
      f();
    } catch (const Error& e) {
      throw SyntaxError(l.no, l.toks[0].col, "well-formed slice", e.what());
    }
  }
};

std::string slice_line(const char* kind, int pos) { return std::string("slice ") + kind + " " + std::to_string(pos) + "\n"; }

}  // namespace

Diagram parse_diagram(const std::string& text) { return Parser(text).run(); }

std::string print_diagram(const LayeredDiagram& d) {
  std::string out = "kind A\nsource " + d.bottom.str() + "\n";
  for (const auto& s : d.slices) switch (s.kind) {
      case ASlice::Kind::Cross: out += slice_line("cross", s.pos); break;
      case ASlice::Kind::Cap: out += slice_line("cap", s.pos); break;
      case ASlice::Kind::Cup:
        out += "slice cup " + std::to_string(s.pos) + " " + std::to_string(s.color) + (s.left_sign > 0 ? " +\n" : " -\n");
        break;
    }
  return out;
}

std::string print_diagram(const HDiagram& d) {
  std::string out = "kind H\nsigns";
  if (!d.signs.empty()) out += ' ';
  for (int s : d.signs) out += s > 0 ? '+' : '-';
  out += "\nbase " + std::to_string(d.base) + "\n";
  for (const auto& s : d.slices) switch (s.kind) {
      case HSlice::Kind::Cross: out += slice_line("cross", s.pos); break;
      case HSlice::Kind::Cap: out += slice_line("cap", s.pos); break;
      case HSlice::Kind::Cup: out += "slice cup " + std::to_string(s.pos) + (s.left_sign > 0 ? " +\n" : " -\n"); break;
    }
  return out;
}

std::string print_diagram(const Diagram& d) {
  return std::visit([](const auto& x) { return print_diagram(x); }, d);
}

}  // namespace cathei
