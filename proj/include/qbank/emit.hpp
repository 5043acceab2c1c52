#pragma once

/// Pool serialization: the FITB TXT dialect with bracketed accepted-answer
/// lists, the MC HTML dialect with image tags, a strict TXT parser for
/// round-tripping, and file writing with a hashed manifest.

#include <cstddef>
#include <string>
#include <vector>

#include "qbank/question.hpp"

namespace qbank {

/// TXT upload document: "Type: FMB" blocks, numbered stems, answer lines like
/// "z = [-39, -39., -39.0, -39.00]", one blank line between blocks. All
/// questions must be FITB.
std::string emit_txt(const PoolDocument& pool);

/// HTML upload document: clock string in TITLE, centered bold pool name, one
/// span of numbered questions. MC options print as "a. value<BR><BR>" with
/// "*" before the correct label; image options and stem figures become
/// <img src="..."> tags, which must resolve to pool assets.
std::string emit_html(const PoolDocument& pool);

/// Strict positional parser for the emit_txt dialect. Emitter output
/// round-trips byte-identically; anything malformed raises parse_error with
/// the offending line.
PoolDocument parse_txt(const std::string& text);

/// Semantic checks that are legal to parse but wrong to upload: duplicate
/// titles, empty accepted lists. Returns human-readable diagnostics.
std::vector<std::string> pool_lint(const PoolDocument& pool);

enum class PoolFormat { Txt, Html, Both };

struct ManifestEntry {
    std::string filename;
    std::size_t bytes = 0;
    std::string sha256;
};

/// Writes the pool's document file(s) and every asset into out_dir and
/// returns one manifest entry per written file, documents first.
/// PoolFormat::Both routes FITB questions to TXT and MC questions to HTML,
/// creating only the files that have content (an empty pool still writes its
/// empty TXT). Explicit Txt on a pool containing MC questions is an error.
std::vector<ManifestEntry> write_pool(const PoolDocument& pool, const std::string& out_dir,
                                      PoolFormat format);

/// One line per entry: "<filename>\t<bytes>\t<sha-256 hex>\n".
std::string manifest_to_string(const std::vector<ManifestEntry>& manifest);

/// Lowercase hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& bytes);

} // namespace qbank
