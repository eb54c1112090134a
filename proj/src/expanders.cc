// Copyright 2026 The nswnorm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nswnorm/expanders.h"

#include <algorithm>
#include <optional>
#include <vector>

#include "nswnorm/errors.h"
#include "nswnorm/number_words.h"
#include "nswnorm/utf8.h"

namespace nswnorm {
namespace {

bool IsAsciiDigit(char c) { return c >= '0' && c <= '9'; }

bool AllDigits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), IsAsciiDigit);
}

[[noreturn]] void Mismatch(std::string_view what, std::string_view token) {
  throw ValidationError(std::string(what) + ": '" + std::string(token) + "'");
}

std::vector<std::string_view> Split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  size_t start = 0;
  while (true) {
    const size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string Replace(std::string s, std::string_view from, std::string_view to) {
  size_t pos = 0;
  while ((pos = s.find(from, pos)) != std::string::npos) {
    s.replace(pos, from.size(), to);
    pos += to.size();
  }
  return s;
}

// Unicode dashes and minus become '-'; whitespace is removed.
std::string Compact(std::string_view token) {
  std::string s = Replace(std::string(token), "–", "-");
  s = Replace(std::move(s), "−", "-");
  s.erase(std::remove_if(s.begin(), s.end(),
                         [](char c) { return c == ' ' || c == '\t'; }),
          s.end());
  return s;
}

int SmallNumber(std::string_view digits, std::string_view token) {
  if (!AllDigits(digits) || digits.size() > 4) Mismatch("bad number", token);
  int v = 0;
  for (char c : digits) v = v * 10 + (c - '0');
  return v;
}

// Reading of the fractional digits after a decimal comma: leading zeros
// one by one, the rest as a number.
void AppendFraction(std::string_view digits, SpokenText* out) {
  size_t zeros = 0;
  while (zeros < digits.size() && digits[zeros] == '0') ++zeros;
  for (size_t i = 0; i < zeros; ++i) out->words.emplace_back(DigitWord(0));
  if (zeros < digits.size()) out->Append(DigitRunToWords(digits.substr(zeros)));
}

// Integer part with optional '.' or ' ' thousands separators.
void AppendInteger(std::string_view s, std::string_view token,
                   SpokenText* out) {
  if (AllDigits(s)) {
    out->Append(DigitRunToWords(s));
    return;
  }
  const char sep = s.find('.') != std::string_view::npos ? '.' : ' ';
  const auto groups = Split(s, sep);
  if (groups.size() < 2 || groups[0].empty() || groups[0].size() > 3) {
    Mismatch("bad digit grouping", token);
  }
  std::string digits;
  for (size_t i = 0; i < groups.size(); ++i) {
    if (!AllDigits(groups[i]) || (i > 0 && groups[i].size() != 3)) {
      Mismatch("bad digit grouping", token);
    }
    digits += groups[i];
  }
  out->Append(DigitRunToWords(digits));
}

SpokenText ReadCardinal(std::string_view s, std::string_view token) {
  SpokenText out;
  if (!s.empty() && s.front() == '-') {
    out.words.emplace_back("âm");
    s.remove_prefix(1);
  }
  const size_t comma = s.find(',');
  AppendInteger(s.substr(0, comma), token, &out);
  if (comma != std::string_view::npos) {
    const std::string_view frac = s.substr(comma + 1);
    if (!AllDigits(frac)) Mismatch("bad decimal part", token);
    out.words.emplace_back("phẩy");
    AppendFraction(frac, &out);
  }
  return out;
}

// A number or a "a-b" range of numbers, read "a đến b".
SpokenText ReadAmount(std::string_view s, std::string_view token) {
  const size_t dash = s.find('-', 1);
  if (dash == std::string_view::npos) return ReadCardinal(s, token);
  SpokenText out = ReadCardinal(s.substr(0, dash), token);
  out.words.emplace_back("đến");
  out.Append(ReadCardinal(s.substr(dash + 1), token));
  return out;
}

void AppendDay(int day, std::string_view token, SpokenText* out) {
  if (day < 1 || day > 31) Mismatch("day out of range", token);
  if (day <= 9) out->words.emplace_back("mùng");
  out->Append(NumberToWords(day));
}

void AppendMonth(int month, std::string_view token, SpokenText* out) {
  if (month < 1 || month > 12) Mismatch("month out of range", token);
  out->words.emplace_back("tháng");
  out->Append(MonthName(month));
}

void AppendYear(int year, SpokenText* out) {
  out->words.emplace_back("năm");
  out->Append(NumberToWords(year));
}

SpokenText ExpandQuarter(std::string_view token) {
  std::string s(token);
  const std::string lowered = utf8::ToLower(s);
  const std::string_view kQuy = "quý";
  if (lowered.compare(0, kQuy.size(), kQuy) == 0) s.erase(0, kQuy.size());
  s = Compact(s);
  const size_t sep = s.find_first_of("/-.");
  const std::string quarter = s.substr(0, sep);
  int q = 0;
  if (AllDigits(quarter)) {
    q = SmallNumber(quarter, token);
  } else {
    q = ParseRoman(quarter);
  }
  if (q < 1 || q > 4) Mismatch("quarter out of range", token);
  SpokenText out;
  out.words.emplace_back("quý");
  out.Append(NumberToWords(q));
  if (sep != std::string::npos) {
    AppendYear(SmallNumber(std::string_view(s).substr(sep + 1), token), &out);
  }
  return out;
}

struct TimeParts {
  std::optional<int> hour, minute, second;
};

enum class TimeField { kHour = 0, kMinute = 1, kSecond = 2 };

std::optional<TimeField> UnitField(std::string_view unit) {
  if (unit == "h" || unit == "g" || unit == "giờ") return TimeField::kHour;
  if (unit == "p" || unit == "ph" || unit == "'" || unit == "phút") {
    return TimeField::kMinute;
  }
  if (unit == "s" || unit == "\"" || unit == "giây") return TimeField::kSecond;
  return std::nullopt;
}

TimeParts ParseTime(std::string_view s, std::string_view token) {
  // Alternating digit runs and unit markers.
  std::vector<std::pair<std::string_view, std::string_view>> items;
  size_t i = 0;
  while (i < s.size()) {
    const size_t num_start = i;
    while (i < s.size() && IsAsciiDigit(s[i])) ++i;
    if (i == num_start) Mismatch("bad time", token);
    const size_t unit_start = i;
    while (i < s.size() && !IsAsciiDigit(s[i])) ++i;
    items.emplace_back(s.substr(num_start, unit_start - num_start),
                       s.substr(unit_start, i - unit_start));
  }
  if (items.empty() || items.size() > 3) Mismatch("bad time", token);

  TimeParts parts;
  auto set = [&](TimeField field, std::string_view digits) {
    const int v = SmallNumber(digits, token);
    switch (field) {
      case TimeField::kHour:
        parts.hour = v;
        break;
      case TimeField::kMinute:
        parts.minute = v;
        break;
      case TimeField::kSecond:
        parts.second = v;
        break;
    }
  };

  const bool colon = items.size() >= 2 && items[0].second == ":";
  if (colon) {
    for (size_t k = 0; k + 1 < items.size(); ++k) {
      if (items[k].second != ":") Mismatch("bad time", token);
    }
    if (!items.back().second.empty()) Mismatch("bad time", token);
    for (size_t k = 0; k < items.size(); ++k) {
      set(static_cast<TimeField>(k), items[k].first);
    }
  } else {
    int previous = -1;
    for (size_t k = 0; k < items.size(); ++k) {
      int field = 0;
      if (items[k].second.empty()) {
        // A bare trailing number continues with the next smaller unit.
        if (k == 0 || k + 1 != items.size()) Mismatch("bad time", token);
        field = previous + 1;
      } else {
        auto f = UnitField(items[k].second);
        if (!f) Mismatch("bad time unit", token);
        field = static_cast<int>(*f);
      }
      if (field <= previous || field > 2) Mismatch("bad time order", token);
      set(static_cast<TimeField>(field), items[k].first);
      previous = field;
    }
  }
  const bool leading_minute = !parts.hour.has_value();
  if (parts.hour && *parts.hour > 24) Mismatch("hour out of range", token);
  if (parts.minute && !leading_minute && *parts.minute > 59) {
    Mismatch("minute out of range", token);
  }
  if (parts.second && (parts.hour || parts.minute) && *parts.second > 59) {
    Mismatch("second out of range", token);
  }
  return parts;
}

void AppendTime(const TimeParts& t, SpokenText* out) {
  if (t.hour) {
    out->Append(NumberToWords(*t.hour));
    out->words.emplace_back("giờ");
  }
  const bool drop_zero_minutes = t.hour && t.minute == 0 && !t.second;
  if (t.minute && !drop_zero_minutes) {
    out->Append(NumberToWords(*t.minute));
    out->words.emplace_back("phút");
  }
  if (t.second) {
    out->Append(NumberToWords(*t.second));
    out->words.emplace_back("giây");
  }
}

std::optional<std::string_view> LookupLetters(std::string_view word, Tag tag,
                                              const Resources& r) {
  if (tag == Tag::kLwrd) {
    if (auto hit = r.loanwords.FindAnyCase(word)) return hit;
    return r.abbreviations.Find(word);
  }
  if (auto hit = r.abbreviations.Find(word)) return hit;
  return r.loanwords.FindAnyCase(word);
}

SpokenText LetterSequence(std::string_view token) {
  SpokenText out;
  for (char32_t cp : utf8::Decode(token)) {
    if (utf8::IsDigit(cp)) {
      out.words.emplace_back(DigitWord(static_cast<int>(cp - U'0')));
    } else if (utf8::IsLetter(cp)) {
      out.words.push_back(utf8::Encode(cp));
    }
  }
  return out;
}

// Lookup of the whole word, then of the word without a trailing dot, then
// of each letter and digit run separately.
SpokenText ExpandWord(std::string_view word, Tag tag, const Resources& r) {
  SpokenText out;
  if (auto hit = LookupLetters(word, tag, r)) {
    out.Append(*hit);
    return out;
  }
  if (word.size() > 1 && word.back() == '.') {
    if (auto hit = LookupLetters(word.substr(0, word.size() - 1), tag, r)) {
      out.Append(*hit);
      return out;
    }
  }
  const std::u32string cps = utf8::Decode(word);
  size_t i = 0;
  while (i < cps.size()) {
    const size_t start = i;
    if (utf8::IsDigit(cps[i])) {
      while (i < cps.size() && utf8::IsDigit(cps[i])) ++i;
      out.Append(DigitRunToWords(utf8::Encode(cps.substr(start, i - start))));
    } else if (utf8::IsLetter(cps[i])) {
      while (i < cps.size() && utf8::IsLetter(cps[i])) ++i;
      const std::string run = utf8::Encode(cps.substr(start, i - start));
      if (auto hit = LookupLetters(run, tag, r)) {
        out.Append(*hit);
      } else if (tag == Tag::kLwrd) {
        out.words.push_back(run);
        out.fallback = true;
      } else {
        out.Append(LetterSequence(run));
        out.fallback = true;
      }
    } else {
      ++i;
    }
  }
  return out;
}

// Longest currency key found as a prefix or suffix of `s`.
std::optional<std::pair<std::string, std::string_view>> SplitCurrency(
    const std::string& s, const Dictionary& currencies) {
  std::optional<std::pair<std::string, std::string_view>> best;
  size_t best_len = 0;
  for (const std::string& key : currencies.keys()) {
    if (key.size() >= s.size() || key.size() <= best_len) continue;
    if (s.compare(0, key.size(), key) == 0) {
      best = {s.substr(key.size()), *currencies.Find(key)};
      best_len = key.size();
    } else if (s.compare(s.size() - key.size(), key.size(), key) == 0) {
      best = {s.substr(0, s.size() - key.size()), *currencies.Find(key)};
      best_len = key.size();
    }
  }
  return best;
}

SpokenText ExpandMoney(std::string_view token, const Resources& r) {
  const std::string s = Compact(token);
  auto split = SplitCurrency(s, r.currencies);
  if (!split) {
    // Case-insensitive second pass ("vnđ", "Usd").
    const std::string lowered = utf8::ToLower(s);
    for (const std::string& key : r.currencies.keys()) {
      const std::string lk = utf8::ToLower(key);
      if (lk.size() < lowered.size() &&
          lowered.compare(lowered.size() - lk.size(), lk.size(), lk) == 0) {
        split = {s.substr(0, s.size() - lk.size()), *r.currencies.Find(key)};
        break;
      }
    }
  }
  if (!split) Mismatch("no currency", token);
  SpokenText out = ReadAmount(split->first, token);
  out.Append(split->second);
  return out;
}

SpokenText ExpandMeasure(std::string_view token, const Resources& r) {
  const std::string s = Compact(token);
  size_t end = 0;
  while (end < s.size() &&
         (IsAsciiDigit(s[end]) || s[end] == '.' || s[end] == ',' ||
          s[end] == '-')) {
    ++end;
  }
  while (end > 0 && !IsAsciiDigit(s[end - 1])) --end;
  if (end == 0 || end == s.size()) Mismatch("bad measurement", token);
  const std::string unit = s.substr(end);
  auto word = r.units.FindAnyCase(unit);
  if (!word) Mismatch("unknown unit", token);
  SpokenText out = ReadAmount(std::string_view(s).substr(0, end), token);
  out.Append(*word);
  return out;
}

SpokenText ExpandPair(std::string_view token, std::string_view seps,
                      std::string_view connective, bool cardinal) {
  const std::string s = Compact(token);
  const size_t pos = s.find_first_of(seps, 1);
  if (pos == std::string::npos) Mismatch("expected two numbers", token);
  const std::string_view a = std::string_view(s).substr(0, pos);
  const std::string_view b = std::string_view(s).substr(pos + 1);
  SpokenText out;
  if (cardinal) {
    out = ReadCardinal(a, token);
    out.Append(connective);
    out.Append(ReadCardinal(b, token));
  } else {
    if (!AllDigits(a) || !AllDigits(b)) Mismatch("expected digits", token);
    out = DigitRunToWords(a);
    out.Append(connective);
    out.Append(DigitRunToWords(b));
  }
  return out;
}

std::string ToRoman(int value) {
  static constexpr std::pair<int, std::string_view> kTable[] = {
      {1000, "M"}, {900, "CM"}, {500, "D"}, {400, "CD"}, {100, "C"},
      {90, "XC"},  {50, "L"},   {40, "XL"}, {10, "X"},   {9, "IX"},
      {5, "V"},    {4, "IV"},   {1, "I"}};
  std::string out;
  for (const auto& [v, s] : kTable) {
    while (value >= v) {
      out += s;
      value -= v;
    }
  }
  return out;
}

}  // namespace

std::string PatternClass(std::string_view token) {
  std::string out;
  bool in_digits = false;
  for (char32_t cp : utf8::Decode(token)) {
    if (utf8::IsDigit(cp)) {
      if (!in_digits) out += 'd';
      in_digits = true;
      continue;
    }
    in_digits = false;
    utf8::Append(&out, utf8::ToLower(cp));
  }
  return out;
}

int ParseRoman(std::string_view token) {
  if (token.empty() || token.size() > 15) Mismatch("not a roman numeral", token);
  int value = 0;
  int prev = 0;
  for (auto it = token.rbegin(); it != token.rend(); ++it) {
    int v = 0;
    switch (*it) {
      case 'I': v = 1; break;
      case 'V': v = 5; break;
      case 'X': v = 10; break;
      case 'L': v = 50; break;
      case 'C': v = 100; break;
      case 'D': v = 500; break;
      case 'M': v = 1000; break;
      default: Mismatch("not a roman numeral", token);
    }
    value += v < prev ? -v : v;
    prev = std::max(prev, v);
  }
  if (value < 1 || value > 3999 || ToRoman(value) != token) {
    Mismatch("not a canonical roman numeral", token);
  }
  return value;
}

SpokenText FallbackReading(std::string_view token) {
  SpokenText out;
  out.fallback = true;
  if (!utf8::IsValid(token)) return out;
  out.Append(LetterSequence(token));
  return out;
}

SpokenText ExpandCardinal(std::string_view token) {
  std::string s = Replace(std::string(token), "−", "-");
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return ReadCardinal(s, token);
}

SpokenText ExpandDate(std::string_view token, Tag tag) {
  if (tag == Tag::kNqua) return ExpandQuarter(token);
  if (tag != Tag::kNdat && tag != Tag::kNday && tag != Tag::kNmon) {
    throw ValidationError("not a date tag");
  }
  const std::string s = Compact(token);
  char sep = '-';
  if (s.find('/') != std::string::npos) {
    sep = '/';
  } else if (s.find('.') != std::string::npos) {
    sep = '.';
  }
  std::vector<std::string_view> parts;
  if (sep == '-') {
    parts.push_back(s);
  } else {
    parts = Split(s, '-');
  }
  if (parts.size() > 2) Mismatch("bad date range", token);
  const size_t full = tag == Tag::kNdat ? 3 : 2;

  SpokenText out;
  for (size_t p = 0; p < parts.size(); ++p) {
    const auto fields = Split(parts[p], sep);
    if (fields.size() > full || (p + 1 == parts.size() && fields.size() != full)) {
      Mismatch("bad date", token);
    }
    std::vector<int> v;
    for (auto f : fields) v.push_back(SmallNumber(f, token));
    if (p > 0) out.words.emplace_back("đến");
    if (tag == Tag::kNmon) {
      AppendMonth(v[0], token, &out);
      if (v.size() > 1) AppendYear(v[1], &out);
      continue;
    }
    AppendDay(v[0], token, &out);
    if (v.size() > 1) AppendMonth(v[1], token, &out);
    if (v.size() > 2) AppendYear(v[2], &out);
  }
  return out;
}

SpokenText ExpandTime(std::string_view token) {
  const std::string s = utf8::ToLower(Compact(token));
  // '-' separates a range unless the token is written like 12-13h, where
  // the first part has no unit and borrows the second part's.
  const size_t dash = s.find('-');
  SpokenText out;
  if (dash == std::string::npos) {
    AppendTime(ParseTime(s, token), &out);
    return out;
  }
  const std::string first = s.substr(0, dash);
  const std::string second = s.substr(dash + 1);
  TimeParts a = AllDigits(first) ? TimeParts{} : ParseTime(first, token);
  const TimeParts b = ParseTime(second, token);
  if (AllDigits(first)) {
    const int v = SmallNumber(first, token);
    if (b.hour) {
      a.hour = v;
    } else if (b.minute) {
      a.minute = v;
    } else {
      a.second = v;
    }
  }
  AppendTime(a, &out);
  out.words.emplace_back("đến");
  AppendTime(b, &out);
  return out;
}

SpokenText ExpandNumeric(std::string_view token, Tag tag,
                         const Resources& resources,
                         const ExpandOptions& options) {
  switch (tag) {
    case Tag::kNnum:
      return ExpandCardinal(token);
    case Tag::kNdig:
      return DigitsToWords(token, {.read_plus = options.read_plus});
    case Tag::kNscr:
      return ExpandPair(token, "-:", "", false);
    case Tag::kNrng:
      return ExpandPair(token, "-", "đến", true);
    case Tag::kNfrc:
      return ExpandPair(token, "/",
                        options.fraction == FractionStyle::kTren ? "trên"
                                                                 : "phần",
                        true);
    case Tag::kNper: {
      std::string s = Compact(token);
      if (s.empty() || s.back() != '%') Mismatch("expected '%'", token);
      s.erase(std::remove(s.begin(), s.end(), '%'), s.end());
      SpokenText out = ReadAmount(s, token);
      out.Append("phần trăm");
      return out;
    }
    case Tag::kNver: {
      const std::string s = Compact(token);
      const auto parts = Split(s, '.');
      if (parts.size() < 2) Mismatch("expected a dotted version", token);
      SpokenText out;
      for (size_t i = 0; i < parts.size(); ++i) {
        if (!AllDigits(parts[i])) Mismatch("bad version component", token);
        if (i > 0) out.words.emplace_back("chấm");
        out.Append(DigitRunToWords(parts[i]));
      }
      return out;
    }
    case Tag::kNtim:
      return ExpandTime(token);
    case Tag::kMoney:
      return ExpandMoney(token, resources);
    case Tag::kMea:
      return ExpandMeasure(token, resources);
    case Tag::kRoma:
      return NumberToWords(ParseRoman(Compact(token)));
    default:
      throw ValidationError("not a numeric tag: " + std::string(TagName(tag)));
  }
}

SpokenText ExpandLetter(std::string_view token, Tag tag,
                        const Resources& resources) {
  if (tag == Tag::kLseq) return LetterSequence(token);
  if (tag != Tag::kLabb && tag != Tag::kLwrd) {
    throw ValidationError("not a letter tag: " + std::string(TagName(tag)));
  }
  if (auto hit = LookupLetters(token, tag, resources)) {
    SpokenText out;
    out.Append(*hit);
    return out;
  }
  SpokenText words;
  words.Append(token);
  SpokenText out;
  for (const auto& w : words.words) out.Append(ExpandWord(w, tag, resources));
  return out;
}

SpokenText Expand(std::string_view token, Tag tag, const Resources& resources,
                  const ExpandOptions& options) {
  try {
    SpokenText out;
    switch (tag) {
      case Tag::kNdat:
      case Tag::kNday:
      case Tag::kNmon:
      case Tag::kNqua:
        out = ExpandDate(token, tag);
        break;
      case Tag::kLabb:
      case Tag::kLwrd:
      case Tag::kLseq:
        out = ExpandLetter(token, tag, resources);
        break;
      case Tag::kUrle:
        out = ExpandUrle(token, resources.lexicon,
                         {&resources.abbreviations, &resources.loanwords},
                         options.urle);
        break;
      default:
        out = ExpandNumeric(token, tag, resources, options);
        break;
    }
    if (out.empty() && !token.empty()) return FallbackReading(token);
    return out;
  } catch (const std::exception&) {
    return FallbackReading(token);
  }
}

}  // namespace nswnorm
