#include <array>
#include <cctype>

#include "litmon/ingest.hpp"
#include "litmon/text.hpp"

namespace litmon {

namespace {

constexpr std::array<std::string_view, 17> kParticles = {"van", "von", "de",  "der", "den", "di",  "da",  "du", "le",
                                                          "la",  "del", "dos", "das", "des", "ter", "ten", "zu"};

bool is_particle(std::string_view token) {
  for (auto p : kParticles) {
    if (p == token) return true;
  }
  return false;
}

bool is_suffix(std::string_view token) {
  auto t = text::to_lower_ascii(token);
  return t == "jr" || t == "jr." || t == "sr" || t == "sr." || t == "ii" || t == "iii" || t == "iv";
}

std::vector<std::string> tokens(std::string_view s) {
  std::vector<std::string> out;
  for (auto& t : text::split(text::collapse_whitespace(s), ' ')) {
    if (!t.empty()) out.push_back(std::move(t));
  }
  return out;
}

// First code point of a name part, uppercased when ASCII.
std::string initial_of(std::string_view part) {
  auto cps = text::decode_utf8(part);
  if (cps.empty()) return {};
  char32_t c = cps.front();
  if (c < 0x80) c = static_cast<char32_t>(std::toupper(static_cast<int>(c)));
  std::string out;
  text::append_utf8(out, c);
  return out;
}

// "Michael F." -> {"M.", "F."}; "Jean-Marc" -> {"J.-M."}; "MF" -> {"M.", "F."}.
std::vector<std::string> initials(std::string_view given) {
  std::vector<std::string> out;
  std::string normalized(given);
  for (auto& c : normalized) {
    if (c == '.') c = ' ';
  }
  for (const auto& part : tokens(normalized)) {
    if (part.find('-') != std::string::npos) {
      std::string joined;
      for (const auto& piece : text::split(part, '-')) {
        if (piece.empty()) continue;
        if (!joined.empty()) joined += '-';
        joined += initial_of(piece) + ".";
      }
      if (!joined.empty()) out.push_back(joined);
      continue;
    }
    bool all_upper_ascii = part.size() <= 3;
    for (char c : part) all_upper_ascii = all_upper_ascii && std::isupper(static_cast<unsigned char>(c));
    if (all_upper_ascii && part.size() > 1) {
      for (char c : part) out.push_back(std::string(1, c) + ".");
      continue;
    }
    out.push_back(initial_of(part) + ".");
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

NormalizedName normalize_author_name(std::string_view raw) {
  std::string name = text::collapse_whitespace(text::decode_latex(raw));
  if (name.empty()) throw Error(ErrorCode::InvalidArgument, "author name is blank");

  std::string family;
  std::string given;
  if (auto comma = name.find(','); comma != std::string::npos) {
    auto parts = text::split(name, ',');
    family = text::collapse_whitespace(parts[0]);
    if (parts.size() >= 3 && is_suffix(text::trim(parts[1]))) {
      given = text::collapse_whitespace(parts[2]);
    } else {
      given = text::collapse_whitespace(parts[1]);
    }
  } else {
    auto toks = tokens(name);
    if (toks.size() >= 2 && is_suffix(toks.back())) toks.pop_back();
    if (toks.size() < 2) {
      return {name, text::fold_key(name), false};
    }
    std::size_t family_start = toks.size() - 1;
    while (family_start > 1 && is_particle(toks[family_start - 1])) --family_start;
    std::vector<std::string> family_toks(toks.begin() + static_cast<std::ptrdiff_t>(family_start), toks.end());
    std::vector<std::string> given_toks(toks.begin(), toks.begin() + static_cast<std::ptrdiff_t>(family_start));
    family = join(family_toks, " ");
    given = join(given_toks, " ");
  }

  if (family.empty()) return {name, text::fold_key(name), false};
  const auto inits = initials(given);
  if (inits.empty()) return {family, text::fold_key(family), false};

  NormalizedName out;
  out.display_name = family + ", " + join(inits, " ");
  out.canonical_key = text::fold_key(family) + "_" + text::fold_key(join(inits, ""));
  return out;
}

}  // namespace litmon
