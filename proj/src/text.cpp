#include "litmon/text.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <numeric>

namespace litmon::text {

namespace {

constexpr char32_t kReplacement = 0xFFFD;

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

// Base letters for U+00C0..U+00FF. Empty entries are kept as-is.
constexpr std::array<std::string_view, 64> kLatin1Fold = {
    "A", "A", "A", "A", "A", "A", "AE", "C", "E", "E", "E", "E", "I", "I", "I", "I",
    "D", "N", "O", "O", "O", "O", "O", "",  "O", "U", "U", "U", "U", "Y", "TH", "ss",
    "a", "a", "a", "a", "a", "a", "ae", "c", "e", "e", "e", "e", "i", "i", "i", "i",
    "d", "n", "o", "o", "o", "o", "o", "",  "o", "u", "u", "u", "u", "y", "th", "y"};

// Base letters for U+0100..U+017F (Latin Extended-A).
constexpr std::array<std::string_view, 128> kLatinExtAFold = {
    "A", "a", "A", "a", "A", "a",                                // 0100
    "C", "c", "C", "c", "C", "c", "C", "c",                      // 0106
    "D", "d", "D", "d",                                          // 010E
    "E", "e", "E", "e", "E", "e", "E", "e", "E", "e",            // 0112
    "G", "g", "G", "g", "G", "g", "G", "g",                      // 011C
    "H", "h", "H", "h",                                          // 0124
    "I", "i", "I", "i", "I", "i", "I", "i", "I", "i",            // 0128
    "IJ", "ij", "J", "j",                                        // 0132
    "K", "k", "k",                                               // 0136
    "L", "l", "L", "l", "L", "l", "L", "l", "L", "l",            // 0139
    "N", "n", "N", "n", "N", "n", "n", "N", "n",                 // 0143
    "O", "o", "O", "o", "O", "o", "OE", "oe",                    // 014C
    "R", "r", "R", "r", "R", "r",                                // 0154
    "S", "s", "S", "s", "S", "s", "S", "s",                      // 015A
    "T", "t", "T", "t", "T", "t",                                // 0162
    "U", "u", "U", "u", "U", "u", "U", "u", "U", "u", "U", "u",  // 0168
    "W", "w", "Y", "y", "Y",                                     // 0174
    "Z", "z", "Z", "z", "Z", "z", "s"};                          // 0179

struct Composition {
  char accent;
  char base;
  char32_t cp;
};

// (LaTeX accent command, base letter) -> precomposed code point.
constexpr Composition kCompositions[] = {
    {'\'', 'A', 0xC1},  {'\'', 'E', 0xC9},  {'\'', 'I', 0xCD},  {'\'', 'O', 0xD3},  {'\'', 'U', 0xDA},
    {'\'', 'Y', 0xDD},  {'\'', 'a', 0xE1},  {'\'', 'e', 0xE9},  {'\'', 'i', 0xED},  {'\'', 'o', 0xF3},
    {'\'', 'u', 0xFA},  {'\'', 'y', 0xFD},  {'\'', 'C', 0x106}, {'\'', 'c', 0x107}, {'\'', 'L', 0x139},
    {'\'', 'l', 0x13A}, {'\'', 'N', 0x143}, {'\'', 'n', 0x144}, {'\'', 'R', 0x154}, {'\'', 'r', 0x155},
    {'\'', 'S', 0x15A}, {'\'', 's', 0x15B}, {'\'', 'Z', 0x179}, {'\'', 'z', 0x17A},
    {'`', 'A', 0xC0},   {'`', 'E', 0xC8},   {'`', 'I', 0xCC},   {'`', 'O', 0xD2},   {'`', 'U', 0xD9},
    {'`', 'a', 0xE0},   {'`', 'e', 0xE8},   {'`', 'i', 0xEC},   {'`', 'o', 0xF2},   {'`', 'u', 0xF9},
    {'^', 'A', 0xC2},   {'^', 'E', 0xCA},   {'^', 'I', 0xCE},   {'^', 'O', 0xD4},   {'^', 'U', 0xDB},
    {'^', 'a', 0xE2},   {'^', 'e', 0xEA},   {'^', 'i', 0xEE},   {'^', 'o', 0xF4},   {'^', 'u', 0xFB},
    {'^', 'C', 0x108},  {'^', 'c', 0x109},  {'^', 'G', 0x11C},  {'^', 'g', 0x11D},  {'^', 'H', 0x124},
    {'^', 'h', 0x125},  {'^', 'J', 0x134},  {'^', 'j', 0x135},  {'^', 'S', 0x15C},  {'^', 's', 0x15D},
    {'^', 'W', 0x174},  {'^', 'w', 0x175},  {'^', 'Y', 0x176},  {'^', 'y', 0x177},
    {'"', 'A', 0xC4},   {'"', 'E', 0xCB},   {'"', 'I', 0xCF},   {'"', 'O', 0xD6},   {'"', 'U', 0xDC},
    {'"', 'a', 0xE4},   {'"', 'e', 0xEB},   {'"', 'i', 0xEF},   {'"', 'o', 0xF6},   {'"', 'u', 0xFC},
    {'"', 'y', 0xFF},   {'"', 'Y', 0x178},
    {'~', 'A', 0xC3},   {'~', 'N', 0xD1},   {'~', 'O', 0xD5},   {'~', 'a', 0xE3},   {'~', 'n', 0xF1},
    {'~', 'o', 0xF5},   {'~', 'I', 0x128},  {'~', 'i', 0x129},  {'~', 'U', 0x168},  {'~', 'u', 0x169},
    {'r', 'A', 0xC5},   {'r', 'a', 0xE5},   {'r', 'U', 0x16E},  {'r', 'u', 0x16F},
    {'c', 'C', 0xC7},   {'c', 'c', 0xE7},   {'c', 'S', 0x15E},  {'c', 's', 0x15F},  {'c', 'T', 0x162},
    {'c', 't', 0x163},  {'c', 'G', 0x122},  {'c', 'g', 0x123},  {'c', 'K', 0x136},  {'c', 'k', 0x137},
    {'c', 'L', 0x13B},  {'c', 'l', 0x13C},  {'c', 'N', 0x145},  {'c', 'n', 0x146},  {'c', 'R', 0x156},
    {'c', 'r', 0x157},
    {'v', 'C', 0x10C},  {'v', 'c', 0x10D},  {'v', 'D', 0x10E},  {'v', 'd', 0x10F},  {'v', 'E', 0x11A},
    {'v', 'e', 0x11B},  {'v', 'N', 0x147},  {'v', 'n', 0x148},  {'v', 'R', 0x158},  {'v', 'r', 0x159},
    {'v', 'S', 0x160},  {'v', 's', 0x161},  {'v', 'T', 0x164},  {'v', 't', 0x165},  {'v', 'Z', 0x17D},
    {'v', 'z', 0x17E},  {'v', 'L', 0x13D},  {'v', 'l', 0x13E},
    {'=', 'A', 0x100},  {'=', 'a', 0x101},  {'=', 'E', 0x112},  {'=', 'e', 0x113},  {'=', 'I', 0x12A},
    {'=', 'i', 0x12B},  {'=', 'O', 0x14C},  {'=', 'o', 0x14D},  {'=', 'U', 0x16A},  {'=', 'u', 0x16B},
    {'u', 'A', 0x102},  {'u', 'a', 0x103},  {'u', 'G', 0x11E},  {'u', 'g', 0x11F},  {'u', 'U', 0x16C},
    {'u', 'u', 0x16D},  {'u', 'E', 0x114},  {'u', 'e', 0x115},  {'u', 'I', 0x12C},  {'u', 'i', 0x12D},
    {'u', 'O', 0x14E},  {'u', 'o', 0x14F},
    {'.', 'C', 0x10A},  {'.', 'c', 0x10B},  {'.', 'E', 0x116},  {'.', 'e', 0x117},  {'.', 'G', 0x120},
    {'.', 'g', 0x121},  {'.', 'I', 0x130},  {'.', 'Z', 0x17B},  {'.', 'z', 0x17C},
    {'k', 'A', 0x104},  {'k', 'a', 0x105},  {'k', 'E', 0x118},  {'k', 'e', 0x119},  {'k', 'I', 0x12E},
    {'k', 'i', 0x12F},  {'k', 'U', 0x172},  {'k', 'u', 0x173},
    {'H', 'O', 0x150},  {'H', 'o', 0x151},  {'H', 'U', 0x170},  {'H', 'u', 0x171},
};

char32_t combining_mark(char accent) {
  switch (accent) {
    case '`': return 0x300;
    case '\'': return 0x301;
    case '^': return 0x302;
    case '~': return 0x303;
    case '=': return 0x304;
    case 'u': return 0x306;
    case '.': return 0x307;
    case '"': return 0x308;
    case 'r': return 0x30A;
    case 'H': return 0x30B;
    case 'v': return 0x30C;
    case 'c': return 0x327;
    case 'k': return 0x328;
    default: return 0;
  }
}

bool is_accent_symbol(char c) {
  return c == '\'' || c == '`' || c == '^' || c == '"' || c == '~' || c == '=' || c == '.';
}

bool is_accent_letter(std::string_view name) {
  return name == "u" || name == "v" || name == "H" || name == "c" || name == "k" || name == "r";
}

struct NamedSymbol {
  std::string_view name;
  std::string_view utf8;
};

constexpr NamedSymbol kNamedSymbols[] = {
    {"ss", "ß"}, {"o", "ø"},  {"O", "Ø"},  {"ae", "æ"}, {"AE", "Æ"},
    {"oe", "œ"}, {"OE", "Œ"}, {"aa", "å"}, {"AA", "Å"}, {"l", "ł"},
    {"L", "Ł"},  {"i", "ı"},       {"j", "ȷ"},       {"textendash", "–"},
    {"textemdash", "—"}, {"textasciitilde", "~"}, {"textregistered", "®"},
    {"texttrademark", "™"}, {"copyright", "©"}, {"textdegree", "°"},
    {"LaTeX", "LaTeX"}, {"TeX", "TeX"},
};

void emit_accented(std::string& out, char accent, std::string_view base) {
  if (base.empty()) {
    return;
  }
  // Accents go on the dotless forms: \'{\i} is an i-acute.
  if (base == "ı") base = "i";
  if (base == "ȷ") base = "j";
  if (base.size() == 1) {
    for (const auto& c : kCompositions) {
      if (c.accent == accent && c.base == base[0]) {
        append_utf8(out, c.cp);
        return;
      }
    }
  }
  out += base;
  if (auto mark = combining_mark(accent)) {
    append_utf8(out, mark);
  }
}

class LatexDecoder {
 public:
  explicit LatexDecoder(std::string_view src) : src_(src) {}

  std::string run() {
    std::string out;
    decode_until(out, false);
    return out;
  }

 private:
  // Decodes until end of input or, when in_group is set, the matching '}'.
  void decode_until(std::string& out, bool in_group) {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '}') {
        ++pos_;
        if (in_group) {
          return;
        }
        continue;
      }
      if (c == '{') {
        ++pos_;
        decode_until(out, true);
        continue;
      }
      if (c == '\\') {
        decode_command(out);
        continue;
      }
      if (c == '~') {
        out += ' ';
        ++pos_;
        continue;
      }
      if (c == '-' && src_.substr(pos_, 3) == "---") {
        out += "—";
        pos_ += 3;
        continue;
      }
      if (c == '-' && src_.substr(pos_, 2) == "--") {
        out += "–";
        pos_ += 2;
        continue;
      }
      out += c;
      ++pos_;
    }
  }

  // Reads the argument of an accent command: either a braced group, a
  // command such as \i, or a single character.
  std::string read_accent_argument() {
    while (pos_ < src_.size() && src_[pos_] == ' ') {
      ++pos_;
    }
    if (pos_ >= src_.size()) {
      return {};
    }
    std::string arg;
    if (src_[pos_] == '{') {
      ++pos_;
      decode_until(arg, true);
      return arg;
    }
    if (src_[pos_] == '\\') {
      decode_command(arg);
      return arg;
    }
    // Single UTF-8 character.
    std::size_t len = 1;
    auto lead = static_cast<unsigned char>(src_[pos_]);
    if (lead >= 0xF0) len = 4;
    else if (lead >= 0xE0) len = 3;
    else if (lead >= 0xC0) len = 2;
    arg = std::string(src_.substr(pos_, len));
    pos_ += len;
    return arg;
  }

  void decode_command(std::string& out) {
    ++pos_;  // backslash
    if (pos_ >= src_.size()) {
      out += '\\';
      return;
    }
    char c = src_[pos_];
    if (is_accent_symbol(c)) {
      ++pos_;
      emit_accented(out, c, read_accent_argument());
      return;
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) {
      // Escaped punctuation: \& \% \$ \# \_ \{ \} and "\ " spacing.
      ++pos_;
      if (c == ',' || c == ';' || c == ' ' || c == '/') {
        out += ' ';
      } else if (c == '\\') {
        out += ' ';
      } else {
        out += c;
      }
      return;
    }
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) {
      ++pos_;
    }
    std::string_view name = src_.substr(start, pos_ - start);
    if (is_accent_letter(name)) {
      emit_accented(out, name[0], read_accent_argument());
      return;
    }
    for (const auto& sym : kNamedSymbols) {
      if (sym.name == name) {
        out += sym.utf8;
        // A named symbol swallows one following space ("\ss e").
        if (pos_ < src_.size() && src_[pos_] == ' ') {
          ++pos_;
        }
        return;
      }
    }
    // Formatting commands (\emph{..}, \textit{..}, ...) keep their argument;
    // the braced group is decoded by the main loop.
    if (pos_ < src_.size() && src_[pos_] == ' ') {
      ++pos_;
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace

std::u32string decode_utf8(std::string_view input) {
  std::u32string out;
  out.reserve(input.size());
  std::size_t i = 0;
  while (i < input.size()) {
    auto b0 = static_cast<unsigned char>(input[i]);
    std::size_t len = 0;
    char32_t cp = 0;
    if (b0 < 0x80) {
      out.push_back(b0);
      ++i;
      continue;
    } else if ((b0 & 0xE0) == 0xC0) {
      len = 2;
      cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3;
      cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4;
      cp = b0 & 0x07;
    } else {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    if (i + len > input.size()) {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    bool ok = true;
    for (std::size_t k = 1; k < len; ++k) {
      auto b = static_cast<unsigned char>(input[i + k]);
      if ((b & 0xC0) != 0x80) {
        ok = false;
        break;
      }
      cp = (cp << 6) | (b & 0x3F);
    }
    if (!ok) {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

std::string encode_utf8(std::u32string_view input) {
  std::string out;
  out.reserve(input.size());
  for (char32_t cp : input) {
    append_utf8(out, cp);
  }
  return out;
}

std::string_view trim(std::string_view s) noexcept {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::string collapse_whitespace(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool pending = false;
  for (char c : trim(s)) {
    if (is_space(c)) {
      pending = true;
      continue;
    }
    if (pending) {
      out += ' ';
      pending = false;
    }
    out += c;
  }
  return out;
}

std::string to_lower_ascii(std::string_view s) {
  std::string out(s);
  for (auto& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

bool iequals(std::string_view a, std::string_view b) noexcept {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(a[i])) != std::tolower(static_cast<unsigned char>(b[i]))) {
      return false;
    }
  }
  return true;
}

bool starts_with_ci(std::string_view s, std::string_view prefix) noexcept {
  return s.size() >= prefix.size() && iequals(s.substr(0, prefix.size()), prefix);
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string fold_diacritics(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char32_t cp : decode_utf8(s)) {
    if (cp >= 0xC0 && cp <= 0xFF && !kLatin1Fold[cp - 0xC0].empty()) {
      out += kLatin1Fold[cp - 0xC0];
    } else if (cp >= 0x100 && cp <= 0x17F) {
      out += kLatinExtAFold[cp - 0x100];
    } else if (cp >= 0x300 && cp <= 0x36F) {
      // combining mark
    } else if (cp >= 0x2010 && cp <= 0x2015) {
      out += '-';
    } else if (cp == 0x2018 || cp == 0x2019) {
      out += '\'';
    } else if (cp == 0x201C || cp == 0x201D) {
      out += '"';
    } else if (cp == 0xA0) {
      out += ' ';
    } else {
      append_utf8(out, cp);
    }
  }
  return out;
}

std::string fold_key(std::string_view s) {
  std::string out;
  for (char c : fold_diacritics(s)) {
    auto u = static_cast<unsigned char>(c);
    if (std::isalnum(u)) {
      out += static_cast<char>(std::tolower(u));
    }
  }
  return out;
}

std::string normalize_title(std::string_view s) {
  std::string folded = fold_diacritics(s);
  std::string out;
  out.reserve(folded.size());
  bool pending = false;
  for (char c : folded) {
    auto u = static_cast<unsigned char>(c);
    if (std::isalnum(u) || u >= 0x80) {
      if (pending && !out.empty()) out += ' ';
      pending = false;
      out += static_cast<char>(std::tolower(u));
    } else if (is_space(c) || c == '-' || c == '/') {
      pending = true;
    }
    // other punctuation is dropped without introducing a separator
  }
  return out;
}

std::string decode_latex(std::string_view s) {
  if (s.find_first_of("\\{}~-") == std::string_view::npos) {
    return std::string(s);
  }
  return LatexDecoder(s).run();
}

std::size_t edit_distance(std::u32string_view a, std::u32string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  std::vector<std::size_t> row(b.size() + 1);
  std::iota(row.begin(), row.end(), std::size_t{0});
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::size_t up = row[j];
      std::size_t cost = a[i - 1] == b[j - 1] ? 0 : 1;
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + cost});
      diag = up;
    }
  }
  return row[b.size()];
}

}  // namespace litmon::text
