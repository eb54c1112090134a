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

#include "nswnorm/generator.h"

#include <algorithm>
#include <cstdio>
#include <optional>
#include <string_view>
#include <utility>

#include "nswnorm/errors.h"
#include "nswnorm/pipeline.h"
#include "nswnorm/preprocess.h"
#include "nswnorm/utf8.h"

namespace nswnorm {

uint64_t Rng::Next() { return engine_(); }

uint64_t Rng::Below(uint64_t n) {
  if (n == 0) throw ValidationError("Rng::Below(0)");
  const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  uint64_t x;
  do {
    x = Next();
  } while (x >= limit);
  return x % n;
}

int Rng::Range(int lo, int hi) {
  return lo + static_cast<int>(Below(static_cast<uint64_t>(hi - lo + 1)));
}

double Rng::Unit() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }

namespace {

using Words = std::vector<std::string_view>;

struct Carrier {
  std::string_view before;
  std::string_view after;
};

template <typename T>
const T& Pick(Rng& rng, const std::vector<T>& items) {
  return items[rng.Below(items.size())];
}

std::string Num(int v) { return std::to_string(v); }

std::string Pad2(int v) {
  char buf[8];
  std::snprintf(buf, sizeof(buf), "%02d", v);
  return buf;
}

// 1234567 -> "1.234.567" (or with spaces).
std::string Grouped(long v, char sep) {
  std::string digits = std::to_string(v);
  std::string out;
  const int n = static_cast<int>(digits.size());
  for (int i = 0; i < n; ++i) {
    if (i > 0 && (n - i) % 3 == 0) out += sep;
    out += digits[i];
  }
  return out;
}

std::string Roman(int v) {
  static constexpr std::pair<int, std::string_view> kTable[] = {
      {10, "X"}, {9, "IX"}, {5, "V"}, {4, "IV"}, {1, "I"}};
  std::string out;
  for (const auto& [value, s] : kTable) {
    while (v >= value) {
      out += s;
      v -= value;
    }
  }
  return out;
}

const Words kSyllables = {
    "anh",  "khanh", "phong", "dao",  "tao",  "hien", "ho",   "nha",
    "trang", "minh", "hung",  "lan",  "huong", "mai", "linh", "tuan",
    "long", "hai",  "nam",   "bao",  "tin",  "moi",  "shop", "xinh",
    "vui",  "yeu",  "thuong", "hoa", "binh", "an",   "duc",  "tri",
    "tam",  "quang", "huy",  "hoang", "ngoc", "thao", "phuong", "thuy"};

const Words kFiller = {
    "người", "dân",  "được", "cho",  "biết", "đã",   "đang", "sẽ",
    "có",    "nhiều", "mới", "trong", "khi",  "của", "các",  "những",
    "năm",   "nay",  "này",  "rất",  "cũng", "vẫn",  "tiếp", "tục",
    "theo",  "báo",  "cáo",  "thông", "tin", "chính", "phủ", "tỉnh",
    "thành", "phố",  "khu",  "vực",  "xã",   "hội",  "kinh", "tế",
    "trường", "học", "sinh", "viên", "công", "ty",   "bệnh", "viện"};

const Words kOpeners = {"Theo",     "Hôm",    "Người", "Ông",   "Bà",
                        "Chị",      "Anh",    "Trong", "Sáng",  "Chiều",
                        "Hiện",     "Tuy",    "Sau",   "Năm",   "Đến"};

// Capitalized standard words, so that capitalization alone does not
// signal an NSW.
const Words kNames = {"Hà Nội", "Việt Nam", "Đà Nẵng", "Huế", "Nguyễn Văn An",
                      "Trần Thị Mai", "Cần Thơ", "Hải Phòng", "Bộ Y tế",
                      "Quốc hội", "Lê Minh"};

const Words kConnectors = {",", "và", "còn", "trong khi", "sau đó", "đồng thời"};

const Words kLabb = {"UBND", "HĐND", "HLV",  "ĐT",   "THPT", "GS",
                     "PGS",  "TS",   "ThS",  "BS",   "CLB",  "BTC",
                     "CSGT", "CNTT", "NXB",  "TW",   "ĐBSCL", "BHXH",
                     "BHYT", "VĐV",  "TNHH", "Tp.",  "TP.",  "TPHCM",
                     "TP.HCM", "ĐH", "THCS", "QĐ"};

const Words kLwrd = {"Ronaldo", "Messi",    "NATO",    "Google",   "Facebook",
                     "Youtube", "Samsung",  "Chelsea", "Arsenal",  "Liverpool",
                     "Barcelona", "Tesla",  "Biden",   "Putin",    "London",
                     "Paris",   "Tokyo",    "Seoul",   "Covid-19", "Covid",
                     "Pfizer",  "Moderna",  "Amazon",  "Netflix",  "Shopee",
                     "Grab",    "Zalo",     "Toyota",  "Honda",    "Apple"};

const Words kLseq = {"VTV", "HTV", "VTC", "TTS", "ASR", "WHO", "FPT",
                     "VNPT", "SCB", "ACB", "BIDV", "VPS", "MTV", "IMF",
                     "WTO", "VCB", "MB", "SHB", "VOV", "HCDC", "CDC",
                     "VKS", "VFF", "AFC", "FIFA", "SEA"};

const Words kDomains = {"gmail.com", "vnu.edu.vn", "yahoo.com", "fpt.vn",
                        "hust.edu.vn"};
const Words kSites = {".vn", ".com", ".com.vn", ".net", ".edu.vn"};

const std::vector<std::pair<std::string_view, std::string_view>> kMeasure = {
    {"", "kg"}, {"", "g"},   {"", "km"},  {" ", "km"}, {"", "m"},
    {"", "cm"}, {"", "km2"}, {"", "m2"},  {"", "oC"},  {"", "ha"},
    {"", "ml"}, {" ", "kg"}, {"", "mm"},  {"", "l"},   {" ", "ha"}};

const std::vector<std::pair<std::string_view, bool>> kCurrency = {
    {"$", true}, {"$", false}, {"VNĐ", false}, {"đ", false},
    {" USD", false}, {" đồng", false}, {"€", false}};

std::string Time(Rng& rng) {
  const int h = rng.Range(0, 23);
  const int m = rng.Range(0, 59);
  const int s = rng.Range(0, 59);
  switch (rng.Below(8)) {
    case 0: return Num(h) + "h" + Pad2(m);
    case 1: return Num(h) + ":" + Pad2(m);
    case 2: return Num(h) + ":" + Pad2(m) + ":" + Pad2(s);
    case 3: return Num(h) + "h" + Pad2(m) + "p" + Pad2(s) + "s";
    case 4: return Num(rng.Range(1, 90)) + "'";
    case 5: return Num(h) + "g" + Pad2(m) + "'";
    case 6: return Num(h % 12 + 1) + "h-" + Num(h % 12 + 1 + rng.Range(1, 10)) + "h";
    default: return Num(h) + "h";
  }
}

std::string Day(Rng& rng, int* day = nullptr) {
  const int d = rng.Range(1, 28);
  if (day) *day = d;
  return rng.Chance(0.3) ? Pad2(d) : Num(d);
}

std::string Month(Rng& rng) {
  const int m = rng.Range(1, 12);
  return rng.Chance(0.3) ? Pad2(m) : Num(m);
}

std::string Year(Rng& rng) { return Num(rng.Range(1990, 2025)); }

std::string FullDate(Rng& rng) {
  const std::string sep(1, "/.-"[rng.Below(3)]);
  switch (rng.Below(6)) {
    case 0: {
      int d = 0;
      Day(rng, &d);
      return Num(d) + "-" + Num(d + rng.Range(1, 3)) + "/" + Month(rng) + "/" +
             Year(rng);
    }
    case 1:
      return Day(rng) + "/" + Month(rng) + "-" + Day(rng) + "/" + Month(rng) +
             "/" + Year(rng);
    default:
      return Day(rng) + sep + Month(rng) + sep + Year(rng);
  }
}

std::string DayMonth(Rng& rng) {
  const std::string sep(1, "/.-"[rng.Below(3)]);
  return Day(rng) + sep + Month(rng);
}

std::string MonthYear(Rng& rng) {
  const std::string sep(1, "/.-"[rng.Below(3)]);
  return Month(rng) + sep + Year(rng);
}

std::string Quarter(Rng& rng) {
  const int q = rng.Range(1, 4);
  const std::string quarter = rng.Chance(0.6) ? Roman(q) : Num(q);
  return std::string(rng.Chance(0.7) ? "Quý " : "quý ") + quarter + "/" +
         Year(rng);
}

std::string Cardinal(Rng& rng) {
  switch (rng.Below(6)) {
    case 0: return Num(rng.Range(1, 99));
    case 1: return Num(rng.Range(100, 99999));
    case 2: return Grouped(rng.Range(1000, 9999999), '.');
    case 3: return Grouped(rng.Range(1000, 999999), ' ');
    case 4: return Num(rng.Range(0, 999)) + "," + Num(rng.Range(1, 99));
    default: return "-" + Num(rng.Range(1, 500));
  }
}

std::string Digits(Rng& rng, int n) {
  std::string out;
  for (int i = 0; i < n; ++i) out += static_cast<char>('0' + rng.Below(10));
  return out;
}

std::string Phone(Rng& rng) {
  const std::string head = "09" + Digits(rng, 2);
  switch (rng.Below(5)) {
    case 0: return head + "." + Digits(rng, 4) + "." + Digits(rng, 2);
    case 1: return head + "-" + Digits(rng, 4) + "-" + Digits(rng, 2);
    case 2: return head + " " + Digits(rng, 3) + " " + Digits(rng, 3);
    case 3: return "0" + Digits(rng, 2) + "." + Digits(rng, 3) + "." + Digits(rng, 3);
    default: return std::string(Pick(rng, Words{"113", "114", "115", "116", "1080"}));
  }
}

std::string Score(Rng& rng) {
  if (rng.Chance(0.3)) {
    const int y = rng.Range(1995, 2024);
    return Num(y) + "-" + Num(y + 1);
  }
  return Num(rng.Range(0, 5)) + "-" + Num(rng.Range(0, 5));
}

std::string Range(Rng& rng) {
  const int a = rng.Range(1, 40);
  return Num(a) + "-" + Num(a + rng.Range(1, 20));
}

std::string Percent(Rng& rng) {
  switch (rng.Below(3)) {
    case 0: return Num(rng.Range(1, 100)) + "%";
    case 1: return Num(rng.Range(0, 99)) + "," + Num(rng.Range(1, 9)) + "%";
    default: {
      const int a = rng.Range(1, 60);
      return Num(a) + "-" + Num(a + rng.Range(1, 30)) + "%";
    }
  }
}

std::string Fraction(Rng& rng) {
  if (rng.Chance(0.15)) return "24/7";
  const int b = rng.Range(2, 10);
  return Num(rng.Range(1, b - 1)) + "/" + Num(b);
}

std::string Version(Rng& rng) {
  std::string v = Num(rng.Range(1, 12)) + "." + Num(rng.Range(0, 9));
  if (rng.Chance(0.3)) v += "." + Num(rng.Range(0, 9));
  return v;
}

std::string Sequence(Rng& rng, const Resources& resources) {
  if (rng.Chance(0.8)) return std::string(Pick(rng, kLseq));
  static constexpr std::string_view kLetters = "BCDFGHKLMNPQRSTVX";
  while (true) {
    std::string s;
    const int n = rng.Range(2, 4);
    for (int i = 0; i < n; ++i) s += kLetters[rng.Below(kLetters.size())];
    if (!resources.abbreviations.Find(s) && !resources.loanwords.Find(s)) {
      return s;
    }
  }
}

std::string Url(Rng& rng) {
  std::string body;
  const int n = rng.Range(2, 3);
  for (int i = 0; i < n; ++i) body += Pick(rng, kSyllables);
  switch (rng.Below(3)) {
    case 0: return "#" + body;
    case 1: return body + "@" + std::string(Pick(rng, kDomains));
    default: return body + std::string(Pick(rng, kSites));
  }
}

std::string Money(Rng& rng) {
  const auto& [symbol, prefix] = Pick(rng, kCurrency);
  std::string amount = rng.Chance(0.5) ? Grouped(rng.Range(1, 999) * 1000, '.')
                                       : Num(rng.Range(1, 999));
  return prefix ? std::string(symbol) + amount : amount + std::string(symbol);
}

std::string Measure(Rng& rng) {
  const auto& [space, unit] = Pick(rng, kMeasure);
  const std::string amount = rng.Chance(0.25)
                                 ? Num(rng.Range(0, 99)) + "," + Num(rng.Range(1, 9))
                                 : Num(rng.Range(1, 999));
  return amount + std::string(space) + std::string(unit);
}

struct TagSpec {
  Tag tag;
  std::vector<Carrier> carriers;
};

const std::vector<TagSpec>& Specs() {
  static const auto* specs = new std::vector<TagSpec>{
      {Tag::kNtim, {{"lúc", ""}, {"vào lúc", "sáng"}, {"từ", "chiều"}, {"khoảng", "tối"}, {"phút thứ", ""}}},
      {Tag::kNdat, {{"ngày", ""}, {"vào ngày", ""}, {"hôm", ""}, {"từ ngày", ""}}},
      {Tag::kNday, {{"ngày", ""}, {"hôm", ""}, {"sáng", ""}, {"tối", ""}, {"đêm", ""}}},
      {Tag::kNmon, {{"vào", ""}, {"từ", "đến nay"}, {"kỳ", ""}, {"hồi", ""}}},
      {Tag::kNqua, {{"trong", ""}, {"tính đến hết", ""}, {"lợi nhuận", ""}}},
      {Tag::kNnum, {{"có", "người"}, {"gần", "ca"}, {"hơn", "học sinh"}, {"thêm", "hộ"}, {"nhiệt độ", ""}}},
      {Tag::kNdig, {{"số điện thoại", ""}, {"gọi", ""}, {"đường dây nóng", ""}, {"liên hệ", ""}}},
      {Tag::kNscr, {{"tỷ số", ""}, {"thắng", ""}, {"thua", ""}, {"mùa giải", ""}, {"hòa", ""}}},
      {Tag::kNrng, {{"từ", "ngày"}, {"khoảng", "người"}, {"mất", "tuần"}, {"từ", "tháng"}}},
      {Tag::kNper, {{"tăng", ""}, {"giảm", ""}, {"chiếm", ""}, {"đạt", ""}}},
      {Tag::kNfrc, {{"tỷ lệ", ""}, {"có", "số xe"}, {"khoảng", "diện tích"}, {"phục vụ", ""}}},
      {Tag::kNver, {{"phiên bản", ""}, {"công nghệ", ""}, {"bản cập nhật", ""}, {"hệ điều hành Android", ""}}},
      {Tag::kLabb, {{"", "tỉnh"}, {"theo", ""}, {"", "cho biết"}, {"ở", "Hà Nội"}, {"đại diện", ""}}},
      {Tag::kLwrd, {{"cầu thủ", ""}, {"tổ chức", ""}, {"hãng", ""}, {"thành phố", ""}, {"dịch", ""}}},
      {Tag::kLseq, {{"kênh", ""}, {"đài", ""}, {"ngân hàng", ""}, {"tập đoàn", ""}, {"mã", ""}}},
      {Tag::kUrle, {{"gửi về", ""}, {"trang", ""}, {"theo dõi", ""}, {"địa chỉ", ""}}},
      {Tag::kMoney, {{"giá", ""}, {"chi", ""}, {"trả", ""}, {"thu về", ""}}},
      {Tag::kRoma, {{"thế kỷ", ""}, {"khóa", ""}, {"lần thứ", ""}, {"Đại hội", ""}}},
      {Tag::kMea, {{"nặng", ""}, {"dài", ""}, {"rộng", ""}, {"nhiệt độ", ""}, {"cao", ""}}},
  };
  return *specs;
}

std::string Value(Tag tag, Rng& rng, const Resources& resources) {
  switch (tag) {
    case Tag::kNtim: return Time(rng);
    case Tag::kNdat: return FullDate(rng);
    case Tag::kNday: return DayMonth(rng);
    case Tag::kNmon: return MonthYear(rng);
    case Tag::kNqua: return Quarter(rng);
    case Tag::kNnum: return Cardinal(rng);
    case Tag::kNdig: return Phone(rng);
    case Tag::kNscr: return Score(rng);
    case Tag::kNrng: return Range(rng);
    case Tag::kNper: return Percent(rng);
    case Tag::kNfrc: return Fraction(rng);
    case Tag::kNver: return Version(rng);
    case Tag::kLabb: return std::string(Pick(rng, kLabb));
    case Tag::kLwrd: return std::string(Pick(rng, kLwrd));
    case Tag::kLseq: return Sequence(rng, resources);
    case Tag::kUrle: return Url(rng);
    case Tag::kMoney: return Money(rng);
    case Tag::kRoma: return Roman(rng.Range(1, 20));
    case Tag::kMea: return Measure(rng);
  }
  return "";
}

Tag PickTag(Rng& rng) {
  const double u = rng.Unit();
  std::vector<Tag> group;
  const TagGroup g = u < kGroupMix[0]                  ? TagGroup::kNumber
                     : u < kGroupMix[0] + kGroupMix[1] ? TagGroup::kLetter
                                                       : TagGroup::kOther;
  for (Tag t : AllTags()) {
    if (GroupOf(t) == g) group.push_back(t);
  }
  return Pick(rng, group);
}

void AddWords(Rng& rng, int lo, int hi, std::vector<std::string>* chunks) {
  const int n = rng.Range(lo, hi);
  for (int i = 0; i < n; ++i) {
    chunks->emplace_back(rng.Chance(0.1) ? Pick(rng, kNames)
                                         : Pick(rng, kFiller));
  }
}

struct Draft {
  std::vector<std::string> chunks;
  // Index into `chunks` of each NSW value and its tag.
  std::vector<std::pair<size_t, Tag>> nsws;
};

Draft DraftSentence(Rng& rng, const Resources& resources) {
  Draft d;
  if (rng.Chance(0.6)) {
    d.chunks.emplace_back(Pick(rng, kOpeners));
    AddWords(rng, 0, 2, &d.chunks);
  }
  const int slots = rng.Range(1, 3);
  for (int s = 0; s < slots; ++s) {
    if (s > 0) d.chunks.emplace_back(Pick(rng, kConnectors));
    const Tag tag = PickTag(rng);
    const TagSpec* spec = nullptr;
    for (const auto& candidate : Specs()) {
      if (candidate.tag == tag) spec = &candidate;
    }
    // Some slots get no carrier words, leaving only the token's shape and
    // random neighbours as evidence.
    const Carrier c = rng.Chance(0.15) ? Carrier{} : Pick(rng, spec->carriers);
    if (!c.before.empty()) d.chunks.emplace_back(c.before);
    d.nsws.emplace_back(d.chunks.size(), tag);
    d.chunks.push_back(Value(tag, rng, resources));
    if (!c.after.empty()) d.chunks.emplace_back(c.after);
    AddWords(rng, 0, 3, &d.chunks);
  }
  d.chunks.emplace_back(".");
  return d;
}

// Maps chunk byte ranges to token spans for the NSW chunks. Fails if a
// token crosses a chunk boundary or an NSW chunk yields no token.
std::optional<std::pair<Sentence, std::vector<NswSpan>>> Align(
    Sentence sentence, const std::vector<std::pair<size_t, size_t>>& ranges,
    const std::vector<std::pair<size_t, Tag>>& nsws) {
  std::vector<size_t> owner;
  size_t c = 0;
  for (const auto& t : sentence.tokens) {
    while (c < ranges.size() && ranges[c].second <= t.begin) ++c;
    if (c == ranges.size() || t.begin < ranges[c].first ||
        t.end > ranges[c].second) {
      return std::nullopt;
    }
    owner.push_back(c);
  }
  std::vector<NswSpan> spans;
  for (const auto& [chunk, tag] : nsws) {
    size_t first = owner.size(), last = 0;
    for (size_t i = 0; i < owner.size(); ++i) {
      if (owner[i] != chunk) continue;
      first = std::min(first, i);
      last = i;
    }
    if (first == owner.size()) return std::nullopt;
    spans.push_back({tag, first, last, ""});
  }
  return std::make_pair(std::move(sentence), std::move(spans));
}

std::string Capitalize(const std::string& word) {
  std::u32string cps = utf8::Decode(word);
  if (!cps.empty()) cps[0] = utf8::ToUpper(cps[0]);
  return utf8::Encode(cps);
}

}  // namespace

SyntheticCorpus GenerateSyntheticCorpus(uint64_t seed, int size,
                                        const Resources& resources,
                                        const ExpandOptions& options) {
  if (size < 1) throw ValidationError("corpus size must be >= 1");
  Rng rng(seed);
  SyntheticCorpus out;
  while (static_cast<int>(out.corpus.size()) < size) {
    Draft d = DraftSentence(rng, resources);
    if (d.nsws.empty() || d.nsws.front().first != 0) {
      d.chunks[0] = Capitalize(d.chunks[0]);
    }

    // Tokenize the whole sentence and assign tokens to chunks by offset.
    // A token straddling two chunks (the attached final dot fusing with the
    // last chunk) forces the detached spelling.
    std::optional<std::pair<Sentence, std::vector<NswSpan>>> aligned;
    std::string written;
    for (bool attach_dot : {true, false}) {
      written.clear();
      std::vector<std::pair<size_t, size_t>> ranges;
      for (size_t c = 0; c < d.chunks.size(); ++c) {
        const bool final_dot = c + 1 == d.chunks.size() && d.chunks[c] == ".";
        if (!written.empty() && !(attach_dot && final_dot)) written += ' ';
        ranges.emplace_back(written.size(), written.size() + d.chunks[c].size());
        written += d.chunks[c];
      }
      if (CleanText(written) != written) break;
      aligned = Align(Tokenize(written), ranges, d.nsws);
      if (aligned) break;
    }
    if (!aligned) continue;
    Sentence& sentence = aligned->first;
    std::vector<NswSpan>& spans = aligned->second;

    std::vector<SpokenText> expansions;
    for (auto& span : spans) {
      span.surface = SpanSurface(sentence, span.first, span.last);
      expansions.push_back(Expand(span.surface, span.tag, resources, options));
    }
    out.parallel.push_back({written, Splice(sentence, spans, expansions)});
    out.corpus.emplace_back(sentence, BioEncode(spans, sentence.size()));
    out.spans.push_back(std::move(spans));
  }
  return out;
}

std::array<double, 3> GroupHistogram(
    const std::vector<std::vector<NswSpan>>& spans) {
  std::array<double, 3> counts = {0, 0, 0};
  double total = 0;
  for (const auto& sentence : spans) {
    for (const auto& span : sentence) {
      counts[static_cast<int>(GroupOf(span.tag))] += 1;
      total += 1;
    }
  }
  if (total > 0) {
    for (double& c : counts) c /= total;
  }
  return counts;
}

}  // namespace nswnorm
