#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "replab/util.hpp"

namespace replab {

using TokenId = std::int32_t;
using TokenSeq = std::vector<TokenId>;

// Word-level vocabulary: dense ids 0..V-1 with <unk>=0 and the document
// separator </s>=1 reserved. Immutable after construction.
class Vocabulary {
 public:
  static constexpr TokenId kUnk = 0;
  static constexpr TokenId kEosDoc = 1;

  // Counts word tokens across the given files and keeps every token seen at
  // least min_freq times, ordered by (frequency desc, token asc) after the
  // two specials.
  static Vocabulary build(const std::vector<std::string>& corpus_paths,
                          int min_freq);
  static Vocabulary from_counts(
      const std::unordered_map<std::string, std::int64_t>& counts,
      int min_freq);

  // File format: one token per line; line 1 is <unk>, line 2 is </s>, then
  // token with id 2 and so on.
  static Vocabulary load(const std::string& path);
  void save(const std::string& path) const;

  TokenId id(std::string_view token) const;  // kUnk when absent
  const std::string& token(TokenId id) const;
  int size() const { return static_cast<int>(tokens_.size()); }
  int min_freq() const { return min_freq_; }
  bool contains(std::string_view token) const;
  bool is_terminator(TokenId id) const;  // token string is one of . ! ?

  // FNV-1a over the serialized token list; stored in checkpoints for
  // compatibility checking.
  std::uint64_t content_hash() const;

 private:
  Vocabulary() = default;
  void finish_init();

  std::vector<std::string> tokens_;
  std::unordered_map<std::string, TokenId> ids_;
  std::vector<bool> terminator_;
  int min_freq_ = 1;
};

// Splits text into word tokens: whitespace-separated, with each character
// in .,!?;:"'() detached as its own token.
std::vector<std::string> split_words(std::string_view text);

TokenSeq tokenize(std::string_view text, const Vocabulary& vocab);
std::string detokenize(const TokenSeq& seq, const Vocabulary& vocab);

// Half-open token range [start, end); the end-punctuation token is the last
// token of the span.
struct SentenceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
  bool operator==(const SentenceSpan&) const = default;
};

// Spans end immediately after each . ! ? token; tokens after the last
// terminator belong to no span.
std::vector<SentenceSpan> segment_sentences(const TokenSeq& seq,
                                            const Vocabulary& vocab);

// A sequence of the form  prefix ++ sentence x n_reps  with coordinate
// arithmetic into the repeated block.
struct PseudoSample {
  TokenSeq ids;
  std::size_t prefix_len = 0;
  std::size_t sentence_len = 0;  // L_s, terminator included
  std::size_t n_reps = 0;        // total copies, N+1

  // flat position of token (n, l), n in [0, n_reps), l in [0, sentence_len)
  std::size_t rep_token_index(std::size_t n, std::size_t l) const {
    return prefix_len + n * sentence_len + l;
  }
};

// prefix ++ sentence x (N+1); errors when the result exceeds max_len.
PseudoSample make_probe_sequence(const TokenSeq& sentence, int n_repeats,
                                 const TokenSeq& prefix, std::size_t max_len);

// Repeats the sentence as many whole times as fits max_len after the prefix;
// errors when fewer than two copies fit.
PseudoSample build_pseudo_sample(const TokenSeq& sentence,
                                 const TokenSeq& prefix_sentence,
                                 std::size_t max_len);

// length-1 uniform draws from the non-special ids followed by '.'.
TokenSeq random_sentence(const Vocabulary& vocab, std::size_t length,
                         std::uint64_t rng_seed);

// Documents are blank-line separated within each file.
std::vector<std::string> read_corpus_documents(
    const std::vector<std::string>& paths);

// Tokenizes each document and joins them with </s> after every document.
TokenSeq corpus_token_stream(const std::vector<std::string>& documents,
                             const Vocabulary& vocab);

// All complete sentences of a token stream, longest first filtering left to
// callers. </s> acts as a hard boundary: spans never cross it.
std::vector<TokenSeq> corpus_sentences(const TokenSeq& stream,
                                       const Vocabulary& vocab);

// Deterministic epoch-shuffled iteration over fixed-length training blocks.
// Block b covers stream[b*block_len, b*block_len + block_len] inclusive of
// one lookahead token so that targets are inputs shifted by one.
class BlockBatcher {
 public:
  BlockBatcher(const TokenSeq& stream, std::size_t block_len,
               std::size_t batch_size, std::uint64_t seed);

  std::size_t blocks_per_epoch() const { return order_.size(); }

  // Fills `inputs` with batch_size blocks of block_len+1 tokens each,
  // reshuffling at epoch boundaries.
  void next_batch(std::vector<TokenSeq>& inputs);

 private:
  void reshuffle();

  const TokenSeq* stream_;
  std::size_t block_len_;
  std::size_t batch_size_;
  std::uint64_t seed_;
  std::size_t epoch_ = 0;
  std::size_t cursor_ = 0;
  std::vector<std::size_t> order_;
};

}  // namespace replab
