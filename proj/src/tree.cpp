#include "lcx/tree.hpp"

#include <algorithm>
#include <fstream>

#include "lcx/errors.hpp"
#include "lcx/textutil.hpp"

namespace lcx {

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t line = 1;

  void skip_space() {
    while (pos < text.size()) {
      char c = text[pos];
      if (c == '\n') ++line;
      if (c != ' ' && c != '\t' && c != '\n' && c != '\r') break;
      ++pos;
    }
  }

  std::string atom() {
    std::size_t start = pos;
    while (pos < text.size()) {
      char c = text[pos];
      if (c == '(' || c == ')' || c == ' ' || c == '\t' || c == '\n' ||
          c == '\r')
        break;
      ++pos;
    }
    if (pos == start) throw ParseError("expected symbol in tree", line);
    return std::string(text.substr(start, pos - start));
  }

  TreeNode node() {
    skip_space();
    if (pos >= text.size()) throw ParseError("unexpected end of tree", line);
    if (text[pos] != '(') {
      TreeNode leaf;
      leaf.label = atom();
      return leaf;
    }
    ++pos;  // consume '('
    skip_space();
    TreeNode n;
    n.label = atom();
    while (true) {
      skip_space();
      if (pos >= text.size()) throw ParseError("unclosed bracket", line);
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      n.children.push_back(node());
    }
    if (n.children.empty())
      throw ParseError("constituent '" + n.label + "' has no children", line);
    return n;
  }
};

}  // namespace

ParseTree parse_tree(std::string_view text) {
  Parser p{text};
  p.skip_space();
  if (p.pos >= text.size()) throw ParseError("empty tree");
  if (text[p.pos] != '(') throw ParseError("tree must start with '('", p.line);
  TreeNode root = p.node();
  p.skip_space();
  if (p.pos < text.size())
    throw ParseError("trailing content after tree", p.line);
  return ParseTree{std::move(root)};
}

namespace {

void render_node(const TreeNode& n, std::string& out) {
  if (n.is_leaf()) {
    out += n.label;
    return;
  }
  out += '(';
  out += n.label;
  for (const TreeNode& c : n.children) {
    out += ' ';
    render_node(c, out);
  }
  out += ')';
}

}  // namespace

std::string render_tree(const ParseTree& tree) {
  std::string out;
  render_node(tree.root, out);
  return out;
}

int tree_height(const TreeNode& node) {
  if (node.is_leaf()) return 0;
  int best = 0;
  for (const TreeNode& c : node.children) best = std::max(best, tree_height(c));
  return best + 1;
}

namespace {

// Splices out an only child unless it is a preterminal, so a chain
// X > Y > Z > (W w) keeps just X > (W w) and a unary wrapper above a
// branching node merges into it.  Leaf attachments and all branching
// structure survive.
void splice_unary(TreeNode& n) {
  while (n.children.size() == 1) {
    TreeNode& u = n.children[0];
    if (u.is_leaf() || u.is_preterminal()) break;
    std::vector<TreeNode> grand = std::move(u.children);
    n.children = std::move(grand);
  }
  for (TreeNode& c : n.children) splice_unary(c);
}

}  // namespace

int flattened_tree_height(const TreeNode& node) {
  TreeNode copy = node;
  if (!copy.is_leaf()) splice_unary(copy);
  return tree_height(copy);
}

std::vector<std::string_view> tree_leaves(const TreeNode& node,
                                          bool skip_punctuation) {
  std::vector<std::string_view> out;
  struct Walk {
    bool skip;
    std::vector<std::string_view>& out;
    void visit(const TreeNode& n) {
      if (n.is_leaf()) {
        out.push_back(n.label);
        return;
      }
      if (skip && n.is_preterminal() && is_punctuation_tag(n.label)) return;
      for (const TreeNode& c : n.children) visit(c);
    }
  } walk{skip_punctuation, out};
  walk.visit(node);
  return out;
}

bool is_punctuation_tag(std::string_view label) {
  static const std::vector<std::string_view> tags = {
      ".",     ",",     ":",     "``",    "''",    "-LRB-", "-RRB-",
      "-LSB-", "-RSB-", "-LCB-", "-RCB-", "HYPH",  "PUNCT", "SYM",
      "NFP",   "#",     "$"};
  return std::find(tags.begin(), tags.end(), label) != tags.end();
}

std::string_view base_label(std::string_view label) {
  std::size_t cut = label.find_first_of("-=");
  // leading '-' labels like -LRB- are not function-annotated
  if (cut == 0) return label;
  return label.substr(0, cut);
}

namespace {

void count_walk(const TreeNode& n, PhraseCounts& pc) {
  if (n.is_leaf()) return;
  std::string_view base = base_label(n.label);
  if (base == "NP") ++pc.noun_phrases;
  else if (base == "VP") ++pc.verb_phrases;
  else if (base == "SBAR") ++pc.sub_clauses;
  else if (base == "PP") ++pc.prep_phrases;
  else if (base == "ADJP") ++pc.adj_phrases;
  else if (base == "ADVP") ++pc.adv_phrases;
  for (const TreeNode& c : n.children) count_walk(c, pc);
}

}  // namespace

PhraseCounts count_phrases(const TreeNode& node) {
  PhraseCounts pc;
  count_walk(node, pc);
  return pc;
}

std::map<std::string, std::vector<ParseTree>> read_tree_file(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open tree file: " + path);
  std::map<std::string, std::vector<ParseTree>> out;
  std::string current_id;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view sv = line;
    // trim
    while (!sv.empty() && (sv.front() == ' ' || sv.front() == '\t'))
      sv.remove_prefix(1);
    while (!sv.empty() && (sv.back() == ' ' || sv.back() == '\t'))
      sv.remove_suffix(1);
    if (sv.empty()) continue;
    if (sv.front() == '#') {
      std::string_view rest = sv.substr(1);
      while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
      if (rest.substr(0, 2) == "id") {
        rest.remove_prefix(2);
        while (!rest.empty() && (rest.front() == ' ' || rest.front() == '='))
          rest.remove_prefix(1);
        if (rest.empty())
          throw ParseError("empty id in tree file", lineno);
        current_id = std::string(rest);
        out[current_id];  // register even if no trees follow
      }
      continue;
    }
    if (current_id.empty())
      throw ParseError("tree before any '# id =' header", lineno);
    try {
      out[current_id].push_back(parse_tree(sv));
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()) + " [record " + current_id + "]",
                       lineno);
    }
  }
  return out;
}

}  // namespace lcx
