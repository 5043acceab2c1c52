#pragma once

/// The question and pool value types shared by the generators, renderers, and
/// emitters.

#include <string>
#include <vector>

namespace qbank {

enum class QuestionKind { MC, FITB };

struct McOption {
    std::string label;     // "a".."e"
    std::string display;   // text shown after the label; empty for image options
    bool is_correct = false;
    std::string asset_ref; // when nonempty the option displays <img src="...">

    bool operator==(const McOption&) const = default;
};

struct Question {
    std::string title;
    QuestionKind kind = QuestionKind::FITB;
    // Stem text, one entry per line; an empty string is a blank line. For
    // equation questions the equation is the final stem line, set off by a
    // blank, exactly as it prints.
    std::vector<std::string> stem_lines;
    std::vector<McOption> mc_options;            // MC only
    std::vector<std::string> fitb_accepted;      // FITB only
    std::string fitb_answer_label;               // the "z" of "z = [...]"
    std::string asset_ref;                       // stem figure filename, optional

    bool operator==(const Question&) const = default;
};

struct ImageAsset {
    std::string filename; // e.g. correlation0029.svg
    std::string bytes;    // file payload, byte-exact
    int width_px = 0;
};

struct PoolDocument {
    std::string pool_name;
    std::vector<Question> questions;
    std::vector<ImageAsset> assets;
    std::string clock; // injected timestamp text for the HTML TITLE
};

} // namespace qbank
