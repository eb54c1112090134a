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

#include "nswnorm/pipeline.h"

#include <gtest/gtest.h>

#include <map>

#include "nswnorm/crf_train.h"
#include "nswnorm/errors.h"

namespace nswnorm {
namespace {

// Returns fixed labels for known sentences and all-O otherwise.
class TableTagger : public Tagger {
 public:
  void Add(const std::string& source, const std::vector<std::string>& labels) {
    LabelSequence seq;
    for (const auto& l : labels) seq.push_back(*BioLabel::Parse(l));
    table_[source] = seq;
  }
  LabelSequence Tag(const Sentence& sentence) const override {
    std::string key;
    for (const auto& t : sentence.tokens) key += (key.empty() ? "" : " ") + t.text;
    const auto it = table_.find(key);
    if (it != table_.end()) return it->second;
    return LabelSequence(sentence.size(), BioLabel::Outside());
  }

 private:
  std::map<std::string, LabelSequence> table_;
};

class PipelineTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    resources_ = new Resources(Resources::Load(NSWNORM_RESOURCES_DIR));
  }
  static void TearDownTestSuite() { delete resources_; }

  void SetUp() override {
    tagger_.Add("Ngày 31/3 , gần 92000 ca mắc mới Covid-19 ở Tp. Hà Nội",
                {"O", "B-NDAY", "O", "O", "B-NNUM", "O", "O", "O", "B-LWRD",
                 "O", "B-LABB", "O", "O"});
    tagger_.Add("Trong ngày 3/4 , có 3/4 xe được bán .",
                {"O", "O", "B-NDAY", "O", "O", "B-NFRC", "O", "O", "O", "O"});
  }

  static Resources* resources_;
  TableTagger tagger_;
};

Resources* PipelineTest::resources_ = nullptr;

TEST_F(PipelineTest, TableOneRows) {
  const Normalizer n(tagger_, *resources_);
  EXPECT_EQ(n.Normalize("Ngày 31/3, gần 92000 ca mắc mới Covid-19 ở Tp. Hà Nội")
                .spoken,
            "Ngày ba mươi mốt tháng ba , gần chín mươi hai nghìn ca mắc mới "
            "cô vít mười chín ở thành phố Hà Nội");
  EXPECT_EQ(n.Normalize("Trong ngày 3/4, có 3/4 xe được bán.").spoken,
            "Trong ngày mùng ba tháng tư , có ba trên bốn xe được bán .");
}

TEST_F(PipelineTest, NoNswIsIdentity) {
  const Normalizer n(tagger_, *resources_);
  const auto r = n.Normalize("xin   chào các bạn");
  EXPECT_EQ(r.spoken, "xin chào các bạn");
  EXPECT_TRUE(r.spans.empty());
  EXPECT_EQ(n.Normalize("").spoken, "");
}

TEST_F(PipelineTest, SpliceMultiTokenSpan) {
  const Sentence s = SentenceFromTokens({"Quý", "I/2020", "tăng"});
  const std::vector<NswSpan> spans = {{Tag::kNqua, 0, 1, "Quý I/2020"}};
  SpokenText e;
  e.Append("quý một năm hai nghìn không trăm hai mươi");
  EXPECT_EQ(Splice(s, spans, {e}),
            "quý một năm hai nghìn không trăm hai mươi tăng");
}

TEST_F(PipelineTest, BatchMatchesSerial) {
  const Normalizer n(tagger_, *resources_);
  std::vector<std::string> raws;
  for (int i = 0; i < 50; ++i) {
    raws.push_back(i % 3 ? "Trong ngày 3/4, có 3/4 xe được bán."
                         : "câu " + std::to_string(i) + " :)) ");
  }
  EXPECT_EQ(n.NormalizeBatch(raws), reference::NormalizeBatch(n, raws));
  EXPECT_THROW(n.NormalizeBatch({"ok", "bad\xFF"}), Utf8Error);
}

// Whatever the tagger says, normalization returns.
TEST_F(PipelineTest, TotalUnderRandomTags) {
  class RandomTagger : public Tagger {
   public:
    LabelSequence Tag(const Sentence& s) const override {
      LabelSequence out;
      for (size_t i = 0; i < s.size(); ++i) {
        out.push_back(BioLabel::FromIndex(
            static_cast<int>((i * 7 + s.text(i).size() * 13) % 39)));
      }
      return out;
    }
  } random_tagger;
  const Normalizer n(random_tagger, *resources_);
  for (const char* raw : {"Ngày 31/3, gần 92000 ca", "@@ ## .. ,,",
                          "x 1/0/0 -- %%% $ đ", "Ⅻ 😀 &amp; quý V"}) {
    EXPECT_NO_THROW(n.Normalize(raw)) << raw;
  }
}

TEST_F(PipelineTest, CrfTaggerChecksVersion) {
  crf::CrfModel m = crf::CrfModel::Dense(kNumBioLabels, {"bias=1"});
  m.set_template_version(kFeatureTemplateVersion + 1);
  EXPECT_THROW(CrfTagger{m}, VersionMismatchError);
  EXPECT_THROW(CrfTagger{crf::CrfModel::Dense(3, {"bias=1"})},
               ValidationError);
  m.set_template_version(kFeatureTemplateVersion);
  const CrfTagger tagger(m);
  EXPECT_TRUE(tagger.Tag(Sentence{}).empty());
  EXPECT_EQ(tagger.Tag(SentenceFromTokens({"a", "b"})).size(), 2u);
}

}  // namespace
}  // namespace nswnorm
