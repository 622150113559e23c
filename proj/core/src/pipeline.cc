// Copyright 2026 The IdeaReader Authors.
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

#include "ideareader/pipeline.h"

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <set>

#include "ideareader/embedding.h"
#include "ideareader/errors.h"
#include "ideareader/survey.h"
#include "ideareader/text.h"

namespace ideareader::service {
namespace {

using Clock = std::chrono::steady_clock;

class Timer {
 public:
  explicit Timer(std::vector<StageTiming>& sink) : sink_(sink) {}

  void lap(std::string stage) {
    Clock::time_point now = Clock::now();
    sink_.push_back({std::move(stage),
                     std::chrono::duration<double, std::milli>(now - last_).count()});
    last_ = now;
  }

 private:
  std::vector<StageTiming>& sink_;
  Clock::time_point last_ = Clock::now();
};

class Warnings {
 public:
  explicit Warnings(std::vector<std::string>& sink) : sink_(sink) {}

  void add(const std::optional<std::string>& w) {
    if (w && seen_.insert(*w).second) sink_.push_back(*w);
  }

 private:
  std::vector<std::string>& sink_;
  std::set<std::string> seen_;
};

std::string document_text(const PaperRecord& rec) {
  return rec.title + "\n" + rec.abstract;
}

graph::CandidateSet select_candidates(const graph::CitationGraph& graph,
                                      const PaperId& target, Direction direction,
                                      const PipelineConfig& config,
                                      BranchDiagnostics& diag) {
  graph::ExpandedSet expanded = graph::expand_candidates(
      graph, target, direction, config.expansion_threshold, config.max_hops);
  diag.direction = direction;
  diag.expanded_count = expanded.members.size();
  diag.exhausted = expanded.exhausted;
  if (expanded.members.empty()) return {direction, {}};

  // PageRank runs on the expanded set plus the target; the target's own
  // score is discarded.
  std::vector<PaperId> nodes{target};
  for (const auto& [id, hop] : expanded.members) nodes.push_back(id);
  std::map<PaperId, double> scores = graph::pagerank(
      graph, nodes,
      {config.pagerank_damping, config.pagerank_tol, config.pagerank_max_iter});
  scores.erase(target);
  graph::CandidateSet cands =
      graph::select_top_candidates(expanded, scores, config.candidate_limit);
  diag.candidates = cands.papers;
  return cands;
}

// All candidates of both branches plus the target, embedded in one space.
struct SharedEmbedding {
  embedding::TfidfModel tfidf;
  embedding::EmbeddingMatrix vectors;
};

SharedEmbedding embed_batch(const corpus::CorpusStore& store,
                            const graph::CitationGraph& graph,
                            const std::vector<PaperId>& ids,
                            const PipelineConfig& config, Warnings& warnings) {
  std::vector<std::string> texts;
  texts.reserve(ids.size());
  for (const PaperId& id : ids) texts.push_back(document_text(*store.find(id)));

  SharedEmbedding out{embedding::TfidfModel::fit(texts), {}};
  std::vector<embedding::SparseVector> rows;
  rows.reserve(texts.size());
  for (const std::string& t : texts) rows.push_back(out.tfidf.embed(t));
  embedding::EmbeddingMatrix lexical = embedding::reduce_dense(
      ids, rows, out.tfidf.vocabulary_size(), config.embedding_dim);

  embedding::EmbeddingMatrix dense;
  try {
    dense = embedding::fetch_dense_embeddings(config.embed_endpoint(), ids, texts,
                                              out.tfidf, config.embedding_dim);
  } catch (const ProviderError& e) {
    warnings.add(std::string("embedding provider unavailable, using fallback: ") + e.what());
    dense = embedding::fetch_dense_embeddings(ProviderEndpoint{}, ids, texts,
                                              out.tfidf, config.embedding_dim);
  }
  embedding::EmbeddingMatrix fused = embedding::fuse_embeddings(lexical, dense);
  out.vectors = embedding::spectral_propagate(
      graph, fused, {config.propagation_steps, config.propagation_mix});
  return out;
}

embedding::EmbeddingMatrix slice_rows(const embedding::EmbeddingMatrix& all,
                                      const std::vector<graph::Candidate>& cands,
                                      const std::map<PaperId, std::size_t>& row_of) {
  embedding::EmbeddingMatrix sub;
  sub.stage = all.stage;
  sub.fallback = all.fallback;
  sub.vectors.resize(static_cast<Eigen::Index>(cands.size()), all.vectors.cols());
  for (std::size_t i = 0; i < cands.size(); ++i) {
    std::size_t r = row_of.at(cands[i].id);
    sub.ids.push_back(cands[i].id);
    sub.vectors.row(static_cast<Eigen::Index>(i)) =
        all.vectors.row(static_cast<Eigen::Index>(r));
    sub.zero_rows.push_back(all.zero_rows[r]);
  }
  return sub;
}

std::vector<survey::SurveyCard> write_cards(
    const corpus::CorpusStore& store, const SharedEmbedding& shared,
    const BranchDiagnostics& diag, const PipelineConfig& config,
    Warnings& warnings) {
  const ProviderEndpoint summarizer = config.summarize_endpoint();
  const ProviderEndpoint classifier = config.classify_endpoint();
  std::vector<survey::SurveyCard> cards;
  for (const relevance::RankedCluster& cluster : diag.clusters) {
    std::vector<PaperRecord> selected;
    for (const relevance::RelevanceScore& s : cluster.selected)
      selected.push_back(*store.find(s.paper_id));

    std::string label = diag.degraded
                            ? std::string(kDegradedTopicLabel)
                            : survey::extract_topic_label(selected, shared.tfidf);

    std::vector<std::string> abstracts;
    for (const PaperRecord& rec : selected) abstracts.push_back(rec.abstract);
    if (std::all_of(abstracts.begin(), abstracts.end(),
                    [](const std::string& a) { return text::trim(a).empty(); })) {
      abstracts.clear();
      for (const PaperRecord& rec : selected) abstracts.push_back(rec.title);
    }
    survey::GeneralSentence general =
        survey::generate_general_sentence(abstracts, summarizer, shared.tfidf);
    warnings.add(general.warning);

    std::vector<survey::PaperSummary> summaries;
    for (std::size_t i = 0; i < selected.size(); ++i) {
      const PaperRecord& rec = selected[i];
      survey::SummarySentence summary = survey::extract_summary_sentence(rec, classifier);
      warnings.add(summary.warning);
      survey::AlignedSentence aligned = survey::align_subject_tense(summary.sentence, rec);
      summaries.push_back({rec.id, rec.title, rec.year,
                           report::round6(cluster.selected[i].total),
                           std::move(aligned.citation_tag), std::move(aligned.sentence)});
    }
    cards.push_back(survey::build_survey_card(diag.direction, std::move(label),
                                              std::move(general.sentence),
                                              std::move(summaries)));
  }
  return cards;
}

void cluster_and_rank(const graph::CandidateSet& cands,
                      const SharedEmbedding& shared,
                      const std::map<PaperId, std::size_t>& row_of,
                      std::span<const double> target_vec,
                      const PipelineConfig& config, BranchDiagnostics& diag) {
  const std::size_t n = cands.papers.size();
  if (n == 0) return;
  embedding::EmbeddingMatrix sub = slice_rows(shared.vectors, cands.papers, row_of);

  if (n < kMinClusterable) {
    diag.degraded = true;
    diag.assignment.ids = sub.ids;
    diag.assignment.labels.assign(n, 0);
    diag.assignment.k = 1;
  } else {
    clustering::KernelMatrix kernel = clustering::compute_kernel(sub, config.kernel_kind());
    clustering::KSelection selection =
        clustering::select_k(kernel, config.k_min, config.k_max, config.seed);
    diag.assignment = std::move(selection.assignment);
    diag.silhouettes = std::move(selection.silhouettes);
  }

  std::map<PaperId, relevance::RelevanceScore> scores;
  std::map<PaperId, double> pagerank;
  for (std::size_t i = 0; i < n; ++i) {
    const graph::Candidate& c = cands.papers[i];
    Eigen::VectorXd row = sub.vectors.row(static_cast<Eigen::Index>(i)).transpose();
    scores.emplace(c.id, relevance::score_relevance(
                             c.id, target_vec,
                             std::span<const double>(row.data(), static_cast<std::size_t>(row.size())),
                             c.hop, config.relevance_lambda));
    pagerank.emplace(c.id, c.pagerank);
  }
  diag.clusters = relevance::rank_within_cluster(diag.assignment, scores, pagerank,
                                                 config.topic_size);
}

std::vector<report::TopicInput> pair_topics(std::vector<survey::SurveyCard> cards,
                                            const BranchDiagnostics& diag) {
  std::vector<report::TopicInput> topics;
  for (std::size_t i = 0; i < cards.size(); ++i)
    topics.push_back({std::move(cards[i]), diag.clusters[i]});
  return topics;
}

}  // namespace

MachineReadingResult run_pipeline(const corpus::CorpusStore& store,
                                  const graph::CitationGraph& graph,
                                  std::string_view target_id,
                                  const PipelineConfig& config,
                                  const std::string& generated_at) {
  config.validate();
  const PaperRecord* target = store.find(target_id);
  if (target == nullptr || !graph.index_of(target_id))
    throw UnknownPaperError(std::string(target_id));

  MachineReadingResult result;
  Timer timer(result.timings);
  Warnings warnings(result.warnings);

  graph::CandidateSet refs = select_candidates(graph, target->id, Direction::kReferences,
                                               config, result.references);
  graph::CandidateSet cits = select_candidates(graph, target->id, Direction::kCitations,
                                               config, result.citations);
  timer.lap("candidates");

  std::vector<PaperId> batch{target->id};
  std::map<PaperId, std::size_t> row_of{{target->id, 0}};
  for (const graph::CandidateSet* set : {&refs, &cits}) {
    for (const graph::Candidate& c : set->papers) {
      if (row_of.emplace(c.id, batch.size()).second) batch.push_back(c.id);
    }
  }

  std::vector<survey::SurveyCard> ref_cards;
  std::vector<survey::SurveyCard> cit_cards;
  if (batch.size() >= 2) {
    SharedEmbedding shared = embed_batch(store, graph, batch, config, warnings);
    timer.lap("embedding");

    Eigen::VectorXd target_vec = shared.vectors.vectors.row(0).transpose();
    std::span<const double> target_span(target_vec.data(),
                                        static_cast<std::size_t>(target_vec.size()));
    cluster_and_rank(refs, shared, row_of, target_span, config, result.references);
    cluster_and_rank(cits, shared, row_of, target_span, config, result.citations);
    timer.lap("clustering");

    ref_cards = write_cards(store, shared, result.references, config, warnings);
    cit_cards = write_cards(store, shared, result.citations, config, warnings);
    timer.lap("survey");
  }

  const std::size_t reference_count = target->reference_ids.size();
  const std::size_t citation_count = graph.citations(target->id).size();
  report::BuiltTree built = report::build_tree(
      *target, pair_topics(std::move(ref_cards), result.references),
      pair_topics(std::move(cit_cards), result.citations),
      {reference_count, citation_count});

  report::ResultDocument& doc = result.document;
  doc.target = {target->id,      target->title,   target->year, target->authors,
                target->venue,   reference_count, citation_count};
  doc.topics_inspiring = std::move(built.reference_cards);
  doc.topics_influenced = std::move(built.citation_cards);
  doc.tree = std::move(built.tree);
  doc.config_digest = config.digest();
  doc.generated_at = generated_at;
  timer.lap("tree");

  result.bytes = report::serialize_result(doc);
  result.report_html = report::render_report(doc);
  timer.lap("serialize");
  return result;
}

}  // namespace ideareader::service
