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

#include "ideareader/tree_report.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

#include "ideareader/errors.h"
#include "json.hpp"

namespace ideareader::report {
namespace {

using nlohmann::json;

std::string numeral_suffix(int n) {
  static constexpr std::string_view kRoman[] = {"",   "I",   "II", "III",
                                                "IV", "V",   "VI", "VII",
                                                "VIII", "IX", "X"};
  if (n < static_cast<int>(std::size(kRoman))) return " " + std::string(kRoman[n]);
  return " " + std::to_string(n);
}

std::vector<TopicNode> build_branch(const PaperId& root_id, Direction direction,
                                    std::vector<TopicInput>& topics,
                                    std::vector<survey::SurveyCard>& cards_out) {
  std::vector<double> peak(topics.size(), -std::numeric_limits<double>::infinity());
  for (std::size_t t = 0; t < topics.size(); ++t) {
    for (const relevance::RelevanceScore& s : topics[t].cluster.selected)
      peak[t] = std::max(peak[t], s.total);
  }
  std::vector<std::size_t> order(topics.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return peak[a] > peak[b]; });

  std::vector<TopicNode> nodes;
  std::set<std::string> used;
  for (std::size_t t : order) {
    survey::SurveyCard card = std::move(topics[t].card);
    std::string label = card.topic_label;
    for (int n = 2; used.contains(label); ++n) label = card.topic_label + numeral_suffix(n);
    used.insert(label);
    card.topic_label = label;

    TopicNode node;
    node.label = label;
    node.direction = direction;
    for (const survey::PaperSummary& s : card.paper_summaries) {
      if (s.paper_id == root_id)
        throw InternalError("evolution tree: target appears inside a topic");
      node.papers.push_back({s.paper_id, s.title, s.year, s.relevance});
    }
    std::sort(node.papers.begin(), node.papers.end(),
              [](const TreePaper& a, const TreePaper& b) {
                if (a.year != b.year) return a.year < b.year;
                return a.id < b.id;
              });
    nodes.push_back(std::move(node));
    cards_out.push_back(std::move(card));
  }
  return nodes;
}

json card_to_json(const survey::SurveyCard& card) {
  json papers = json::array();
  for (const survey::PaperSummary& s : card.paper_summaries) {
    papers.push_back({{"id", s.paper_id},
                      {"title", s.title},
                      {"year", s.year},
                      {"citation_tag", s.citation_tag},
                      {"summary_sentence", s.sentence},
                      {"relevance", round6(s.relevance)}});
  }
  return {{"label", card.topic_label},
          {"general_sentence", card.general_sentence},
          {"papers", std::move(papers)}};
}

json node_to_json(const TopicNode& node) {
  json papers = json::array();
  for (const TreePaper& p : node.papers) {
    papers.push_back({{"id", p.id},
                      {"title", p.title},
                      {"year", p.year},
                      {"relevance", round6(p.relevance)}});
  }
  return {{"label", node.label}, {"papers", std::move(papers)}};
}

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key))
    throw DataError(std::string("result document: missing '") + key + "'");
  return obj.at(key);
}

template <typename T>
T get(const json& obj, const char* key) {
  try {
    return field(obj, key).get<T>();
  } catch (const json::type_error&) {
    throw DataError(std::string("result document: wrong type for '") + key + "'");
  }
}

const json& array_field(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (!v.is_array())
    throw DataError(std::string("result document: '") + key + "' must be an array");
  return v;
}

survey::SurveyCard card_from_json(const json& j, Direction direction) {
  survey::SurveyCard card;
  card.direction = direction;
  card.topic_label = get<std::string>(j, "label");
  card.general_sentence = get<std::string>(j, "general_sentence");
  for (const json& p : array_field(j, "papers")) {
    card.paper_summaries.push_back({get<std::string>(p, "id"),
                                    get<std::string>(p, "title"),
                                    get<int>(p, "year"),
                                    get<double>(p, "relevance"),
                                    get<std::string>(p, "citation_tag"),
                                    get<std::string>(p, "summary_sentence")});
  }
  return card;
}

TopicNode node_from_json(const json& j, Direction direction) {
  TopicNode node;
  node.direction = direction;
  node.label = get<std::string>(j, "label");
  for (const json& p : array_field(j, "papers")) {
    node.papers.push_back({get<std::string>(p, "id"), get<std::string>(p, "title"),
                           get<int>(p, "year"), get<double>(p, "relevance")});
  }
  return node;
}

std::string escape_html(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&#39;"; break;
      default: out += c;
    }
  }
  return out;
}

constexpr std::string_view kStyle = R"(body{font-family:Georgia,serif;max-width:52rem;margin:2rem auto;padding:0 1rem;color:#222;line-height:1.5}
h1{font-size:1.6rem;margin-bottom:.2rem}h2{border-bottom:1px solid #bbb;padding-bottom:.2rem;margin-top:2rem}
.meta,.stamp{color:#555;font-size:.9rem}.topic{border:1px solid #ddd;border-radius:4px;padding:.5rem 1rem;margin:1rem 0;page-break-inside:avoid}
.topic h3{margin:.3rem 0}.general{font-style:italic}.empty{color:#777}
pre.tree{background:#f6f6f6;padding:1rem;overflow-x:auto;font-size:.85rem}
@media print{body{margin:0;max-width:none}})";

void render_cards(std::ostringstream& out, std::string_view id_prefix,
                  const std::vector<survey::SurveyCard>& cards,
                  std::string_view empty_message) {
  if (cards.empty()) {
    out << "<p class=\"empty\">" << empty_message << "</p>\n";
    return;
  }
  for (std::size_t i = 0; i < cards.size(); ++i) {
    const survey::SurveyCard& card = cards[i];
    out << "<section class=\"topic\" id=\"" << id_prefix << "-" << (i + 1) << "\">\n"
        << "<h3>" << escape_html(card.topic_label) << "</h3>\n"
        << "<p class=\"general\">" << escape_html(card.general_sentence) << "</p>\n"
        << "<ul class=\"summaries\">\n";
    for (const survey::PaperSummary& s : card.paper_summaries)
      out << "<li>" << escape_html(s.sentence) << "</li>\n";
    out << "</ul>\n</section>\n";
  }
}

void render_branch(std::ostringstream& out, std::string_view heading,
                   const std::vector<TopicNode>& branch,
                   std::string_view empty_message) {
  out << "  " << heading << "\n";
  if (branch.empty()) {
    out << "    (" << empty_message << ")\n";
    return;
  }
  for (const TopicNode& node : branch) {
    out << "    * " << escape_html(node.label) << "\n";
    for (const TreePaper& p : node.papers)
      out << "        - " << p.year << "  " << escape_html(p.title) << " ["
          << escape_html(p.id) << "]\n";
  }
}

constexpr std::string_view kNoReferences = "No referenced papers found.";
constexpr std::string_view kNoCitations = "No citing papers found.";

}  // namespace

double round6(double value) {
  double r = std::round(value * 1e6) / 1e6;
  return r == 0.0 ? 0.0 : r;  // drop negative zero
}

BuiltTree build_tree(const PaperRecord& target,
                     std::vector<TopicInput> reference_topics,
                     std::vector<TopicInput> citation_topics,
                     const GraphStats& stats) {
  BuiltTree built;
  built.tree.root = {target.id, target.title, target.year, stats.reference_count,
                     stats.citation_count};
  built.tree.reference_branch = build_branch(target.id, Direction::kReferences,
                                             reference_topics, built.reference_cards);
  built.tree.citation_branch = build_branch(target.id, Direction::kCitations,
                                            citation_topics, built.citation_cards);
  return built;
}

std::string serialize_result(const ResultDocument& doc) {
  json cards_in = json::array();
  for (const survey::SurveyCard& c : doc.topics_inspiring) cards_in.push_back(card_to_json(c));
  json cards_out = json::array();
  for (const survey::SurveyCard& c : doc.topics_influenced) cards_out.push_back(card_to_json(c));
  json left = json::array();
  for (const TopicNode& n : doc.tree.reference_branch) left.push_back(node_to_json(n));
  json right = json::array();
  for (const TopicNode& n : doc.tree.citation_branch) right.push_back(node_to_json(n));

  const TreeRoot& root = doc.tree.root;
  json j = {
      {"target",
       {{"id", doc.target.id},
        {"title", doc.target.title},
        {"year", doc.target.year},
        {"authors", doc.target.authors},
        {"venue", doc.target.venue},
        {"reference_count", doc.target.reference_count},
        {"citation_count", doc.target.citation_count}}},
      {"topics_inspiring", std::move(cards_in)},
      {"topics_influenced", std::move(cards_out)},
      {"tree",
       {{"root",
         {{"id", root.id},
          {"title", root.title},
          {"year", root.year},
          {"reference_count", root.reference_count},
          {"citation_count", root.citation_count}}},
        {"left", std::move(left)},
        {"right", std::move(right)}}},
      {"config_digest", doc.config_digest},
      {"generated_at", doc.generated_at},
  };
  return j.dump(2, ' ', false, json::error_handler_t::replace) + "\n";
}

ResultDocument parse_result(std::string_view bytes) {
  json j;
  try {
    j = json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw DataError(std::string("result document: ") + e.what());
  }
  ResultDocument doc;
  const json& target = field(j, "target");
  doc.target.id = get<std::string>(target, "id");
  doc.target.title = get<std::string>(target, "title");
  doc.target.year = get<int>(target, "year");
  doc.target.authors = get<std::vector<std::string>>(target, "authors");
  doc.target.venue = get<std::string>(target, "venue");
  doc.target.reference_count = get<std::size_t>(target, "reference_count");
  doc.target.citation_count = get<std::size_t>(target, "citation_count");
  for (const json& c : array_field(j, "topics_inspiring"))
    doc.topics_inspiring.push_back(card_from_json(c, Direction::kReferences));
  for (const json& c : array_field(j, "topics_influenced"))
    doc.topics_influenced.push_back(card_from_json(c, Direction::kCitations));

  const json& tree = field(j, "tree");
  const json& root = field(tree, "root");
  doc.tree.root = {get<std::string>(root, "id"), get<std::string>(root, "title"),
                   get<int>(root, "year"), get<std::size_t>(root, "reference_count"),
                   get<std::size_t>(root, "citation_count")};
  for (const json& n : array_field(tree, "left"))
    doc.tree.reference_branch.push_back(node_from_json(n, Direction::kReferences));
  for (const json& n : array_field(tree, "right"))
    doc.tree.citation_branch.push_back(node_from_json(n, Direction::kCitations));
  doc.config_digest = get<std::string>(j, "config_digest");
  doc.generated_at = get<std::string>(j, "generated_at");
  return doc;
}

std::string render_report(const ResultDocument& doc) {
  std::ostringstream out;
  const TargetInfo& t = doc.target;
  std::string authors;
  for (std::size_t i = 0; i < t.authors.size(); ++i) {
    if (i > 0) authors += ", ";
    authors += t.authors[i];
  }

  out << "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n"
      << "<title>Idea flow: " << escape_html(t.title) << "</title>\n"
      << "<style>\n" << kStyle << "\n</style>\n</head>\n<body>\n";

  out << "<header id=\"target\">\n<h1>" << escape_html(t.title) << "</h1>\n"
      << "<p class=\"meta\">" << escape_html(authors);
  if (!t.venue.empty()) out << " &middot; " << escape_html(t.venue);
  out << " &middot; " << t.year << "</p>\n"
      << "<p class=\"meta\">References: " << t.reference_count
      << " &middot; Citations: " << t.citation_count << "</p>\n"
      << "<p class=\"stamp\">Generated " << escape_html(doc.generated_at)
      << " &middot; config " << escape_html(doc.config_digest) << "</p>\n</header>\n";

  out << "<section id=\"inspiring\">\n<h2>Topics that inspired this paper</h2>\n";
  render_cards(out, "inspiring", doc.topics_inspiring, kNoReferences);
  out << "</section>\n";

  out << "<section id=\"influenced\">\n<h2>Topics influenced by this paper</h2>\n";
  render_cards(out, "influenced", doc.topics_influenced, kNoCitations);
  out << "</section>\n";

  out << "<section id=\"tree\">\n<h2>Tracing and evolution tree</h2>\n<pre class=\"tree\">\n"
      << "[target] " << escape_html(doc.tree.root.title) << " (" << doc.tree.root.year
      << ") [" << escape_html(doc.tree.root.id) << "]\n";
  render_branch(out, "&lt;- inspired by", doc.tree.reference_branch, kNoReferences);
  render_branch(out, "-&gt; influenced", doc.tree.citation_branch, kNoCitations);
  out << "</pre>\n</section>\n</body>\n</html>\n";
  return out.str();
}

}  // namespace ideareader::report
