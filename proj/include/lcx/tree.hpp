#pragma once
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace lcx {

// Constituency tree parsed from bracketed notation.  Leaves carry surface
// text in `label`; internal nodes carry constituent labels.
struct TreeNode {
  std::string label;
  std::vector<TreeNode> children;
  bool is_leaf() const { return children.empty(); }
  // node whose only child is a leaf, i.e. a tag+word pair
  bool is_preterminal() const {
    return children.size() == 1 && children[0].is_leaf();
  }
};

struct ParseTree {
  TreeNode root;
};

// Reads one bracketed tree such as "(S (NP (DT The) (NN cat)) (VP (VBZ sat)))".
ParseTree parse_tree(std::string_view text);
std::string render_tree(const ParseTree& tree);

// Height in edges: a bare leaf is 0, a preterminal is 1.
int tree_height(const TreeNode& node);
// Height after contracting internal unary chains: an internal node with a
// single internal child collapses into it, so only branching structure and
// the leaf attachment contribute edges.
int flattened_tree_height(const TreeNode& node);

// Leaf surfaces in order, optionally skipping leaves under punctuation tags.
std::vector<std::string_view> tree_leaves(const TreeNode& node,
                                          bool skip_punctuation = false);

// True for treebank punctuation/symbol preterminal labels.
bool is_punctuation_tag(std::string_view label);

// Category of a phrase label after stripping functional suffixes
// ("NP-SBJ" and "NP=2" both count as NP).
std::string_view base_label(std::string_view label);

// Counts of phrase categories of interest over a whole tree.
struct PhraseCounts {
  std::size_t noun_phrases = 0;   // NP
  std::size_t verb_phrases = 0;   // VP
  std::size_t sub_clauses = 0;    // SBAR
  std::size_t prep_phrases = 0;   // PP
  std::size_t adj_phrases = 0;    // ADJP
  std::size_t adv_phrases = 0;    // ADVP
};
PhraseCounts count_phrases(const TreeNode& node);

// "# id = <record id>" comment lines group trees (one per line) per record.
std::map<std::string, std::vector<ParseTree>> read_tree_file(
    const std::string& path);

}  // namespace lcx
