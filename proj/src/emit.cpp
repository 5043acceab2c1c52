#include "qbank/emit.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <stdexcept>

#include <openssl/evp.h>

#include "qbank/parse_error.hpp"

namespace qbank {

namespace {

void require_asset(const PoolDocument& pool, const std::string& filename,
                   const std::string& title) {
    for (const auto& asset : pool.assets)
        if (asset.filename == filename) return;
    throw std::invalid_argument("question " + title + " references missing asset " + filename);
}

std::string txt_block(const Question& q, int number) {
    if (q.kind != QuestionKind::FITB)
        throw std::invalid_argument("question " + q.title + " is multiple choice; TXT carries"
                                    " fill-in-the-blank only");
    if (q.stem_lines.empty() || q.fitb_accepted.empty() || q.fitb_answer_label.empty())
        throw std::invalid_argument("question " + q.title + " is incomplete");

    std::string out = "Type: FMB\n";
    out += "Title: " + q.title + "\n";
    out += std::to_string(number) + ". " + q.stem_lines[0] + "\n";
    for (std::size_t i = 1; i < q.stem_lines.size(); ++i) out += q.stem_lines[i] + "\n";
    out += "\n";
    out += q.fitb_answer_label + " = [";
    for (std::size_t i = 0; i < q.fitb_accepted.size(); ++i) {
        if (i) out += ", ";
        out += q.fitb_accepted[i];
    }
    out += "]\n";
    return out;
}

std::string html_question_block(const PoolDocument& pool, const Question& q, int number,
                                bool first) {
    std::string out;
    if (first) out += "<SPAN style=\"font-size:14pt; font-family:arial\">";
    out += "Title: " + q.title + "<BR>\n";
    if (q.stem_lines.empty()) throw std::invalid_argument("question " + q.title + " has no stem");
    out += std::to_string(number) + ". " + q.stem_lines[0] + "\n";
    for (std::size_t i = 1; i < q.stem_lines.size(); ++i)
        out += (q.stem_lines[i].empty() ? std::string("<BR><BR>") : q.stem_lines[i]) + "\n";
    out += "<BR><BR>\n";
    if (!q.asset_ref.empty()) {
        require_asset(pool, q.asset_ref, q.title);
        out += "<img src=\"" + q.asset_ref + "\">\n";
        out += "<BR><BR>\n";
    }
    if (q.kind == QuestionKind::MC) {
        for (const auto& opt : q.mc_options) {
            std::string display = opt.display;
            if (!opt.asset_ref.empty()) {
                require_asset(pool, opt.asset_ref, q.title);
                display = "<img src=\"" + opt.asset_ref + "\">";
            }
            out += (opt.is_correct ? "*" : "") + opt.label + ". " + display + "<BR><BR>\n";
        }
    } else {
        out += q.fitb_answer_label + " = [";
        for (std::size_t i = 0; i < q.fitb_accepted.size(); ++i) {
            if (i) out += ", ";
            out += q.fitb_accepted[i];
        }
        out += "]\n";
    }
    out += "<BR><BR><BR>\n";
    return out;
}

} // namespace

std::string emit_txt(const PoolDocument& pool) {
    std::string out;
    int number = 0;
    for (const auto& q : pool.questions) {
        if (number) out += "\n";
        out += txt_block(q, ++number);
    }
    return out;
}

std::string emit_html(const PoolDocument& pool) {
    std::string out = "<HTML>\n";
    out += "<HEAD><TITLE>" + pool.clock + "</TITLE></HEAD>\n\n";
    out += "<BODY>\n\n";
    out += "<B><SPAN style=\"font-size:16pt; font-family:arial\">\n";
    out += "<P align=center>" + pool.pool_name + "</P>\n";
    out += "</SPAN></B>\n\n";
    int number = 0;
    for (const auto& q : pool.questions) {
        if (number) out += "\n";
        out += html_question_block(pool, q, number + 1, number == 0);
        ++number;
    }
    if (number) {
        out += "\n</SPAN></BODY>\n";
    } else {
        out += "</BODY>\n";
    }
    out += "</HTML>\n";
    return out;
}

PoolDocument parse_txt(const std::string& text) {
    PoolDocument pool;
    if (text.empty()) return pool;
    if (text.back() != '\n') {
        const int last_line = 1 + static_cast<int>(std::count(text.begin(), text.end(), '\n'));
        throw parse_error(last_line, "expected a final newline");
    }

    std::vector<std::string> lines;
    std::string::size_type start = 0;
    while (start < text.size()) {
        const auto end = text.find('\n', start);
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }

    std::size_t pos = 0;
    const auto line_no = [&pos]() { return static_cast<int>(pos) + 1; };
    const auto need = [&](const char* what) {
        if (pos >= lines.size()) throw parse_error(static_cast<int>(lines.size()) + 1, what);
    };

    while (pos < lines.size()) {
        need("expected 'Type: FMB'");
        if (lines[pos] != "Type: FMB") throw parse_error(line_no(), "expected 'Type: FMB'");
        ++pos;

        need("expected 'Title: <name>'");
        if (lines[pos].rfind("Title: ", 0) != 0 || lines[pos].size() <= 7)
            throw parse_error(line_no(), "expected 'Title: <name>'");
        Question q;
        q.kind = QuestionKind::FITB;
        q.title = lines[pos].substr(7);
        ++pos;

        // Stem opens with this question's 1-based number.
        need("expected numbered stem line");
        const std::string expected_prefix =
            std::to_string(pool.questions.size() + 1) + ". ";
        if (lines[pos].rfind(expected_prefix, 0) != 0)
            throw parse_error(line_no(), "expected stem starting '" + expected_prefix + "'");
        q.stem_lines.push_back(lines[pos].substr(expected_prefix.size()));
        ++pos;

        // Everything up to the bracketed answer line belongs to the stem; the
        // single blank line right before the answer is the separator.
        std::size_t answer_at = pos;
        const auto is_answer_line = [&lines](std::size_t i) {
            const std::string& s = lines[i];
            const auto open = s.find(" = [");
            return open != std::string::npos && open > 0 && s.back() == ']';
        };
        while (answer_at < lines.size() && !is_answer_line(answer_at)) ++answer_at;
        if (answer_at == lines.size())
            throw parse_error(static_cast<int>(lines.size()) + 1,
                              "expected an answer line '<label> = [...]'");
        if (answer_at == pos || !lines[answer_at - 1].empty())
            throw parse_error(static_cast<int>(answer_at) + 1,
                              "expected a blank line before the answer line");
        while (pos < answer_at - 1) {
            q.stem_lines.push_back(lines[pos]);
            ++pos;
        }
        pos = answer_at;

        const std::string& answer = lines[pos];
        const auto open = answer.find(" = [");
        q.fitb_answer_label = answer.substr(0, open);
        const std::string forms = answer.substr(open + 4, answer.size() - open - 5);
        if (forms.empty()) throw parse_error(line_no(), "expected at least one accepted answer");
        std::string::size_type item = 0;
        while (true) {
            const auto comma = forms.find(", ", item);
            if (comma == std::string::npos) {
                q.fitb_accepted.push_back(forms.substr(item));
                break;
            }
            q.fitb_accepted.push_back(forms.substr(item, comma - item));
            item = comma + 2;
        }
        ++pos;
        pool.questions.push_back(std::move(q));

        if (pos == lines.size()) break;
        if (!lines[pos].empty())
            throw parse_error(line_no(), "expected a blank line between questions");
        ++pos;
        need("expected 'Type: FMB' after block separator");
    }
    return pool;
}

std::vector<std::string> pool_lint(const PoolDocument& pool) {
    std::vector<std::string> problems;
    std::set<std::string> seen;
    for (const auto& q : pool.questions) {
        if (!seen.insert(q.title).second)
            problems.push_back("duplicate title: " + q.title);
        if (q.kind == QuestionKind::FITB && q.fitb_accepted.empty())
            problems.push_back("no accepted answers: " + q.title);
        if (q.kind == QuestionKind::MC) {
            int correct = 0;
            for (const auto& opt : q.mc_options) correct += opt.is_correct ? 1 : 0;
            if (correct != 1)
                problems.push_back("needs exactly one correct option: " + q.title);
        }
    }
    return problems;
}

std::string sha256_hex(const std::string& bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int digest_len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &digest_len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("sha-256 digest failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(digest_len * 2);
    for (unsigned int i = 0; i < digest_len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 0xf];
    }
    return out;
}

namespace {

ManifestEntry write_file(const std::filesystem::path& dir, const std::string& filename,
                         const std::string& bytes) {
    const std::filesystem::path path = dir / filename;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.close();
    if (!out) throw std::runtime_error("write failed: " + path.string());
    return {filename, bytes.size(), sha256_hex(bytes)};
}

} // namespace

std::vector<ManifestEntry> write_pool(const PoolDocument& pool, const std::string& out_dir,
                                      PoolFormat format) {
    namespace fs = std::filesystem;
    const fs::path dir(out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw std::runtime_error("cannot create directory: " + dir.string());

    bool any_fitb = false, any_mc = false;
    for (const auto& q : pool.questions)
        (q.kind == QuestionKind::FITB ? any_fitb : any_mc) = true;

    std::vector<ManifestEntry> manifest;
    if (format == PoolFormat::Txt) {
        manifest.push_back(write_file(dir, pool.pool_name + ".txt", emit_txt(pool)));
    } else if (format == PoolFormat::Html) {
        manifest.push_back(write_file(dir, pool.pool_name + ".html", emit_html(pool)));
    } else {
        if (any_fitb || pool.questions.empty()) {
            PoolDocument fitb = pool;
            std::erase_if(fitb.questions,
                          [](const Question& q) { return q.kind != QuestionKind::FITB; });
            manifest.push_back(write_file(dir, pool.pool_name + ".txt", emit_txt(fitb)));
        }
        if (any_mc) {
            PoolDocument mc = pool;
            std::erase_if(mc.questions,
                          [](const Question& q) { return q.kind != QuestionKind::MC; });
            manifest.push_back(write_file(dir, pool.pool_name + ".html", emit_html(mc)));
        }
    }
    for (const auto& asset : pool.assets)
        manifest.push_back(write_file(dir, asset.filename, asset.bytes));
    return manifest;
}

std::string manifest_to_string(const std::vector<ManifestEntry>& manifest) {
    std::string out;
    for (const auto& entry : manifest) {
        out += entry.filename;
        out += '\t';
        out += std::to_string(entry.bytes);
        out += '\t';
        out += entry.sha256;
        out += '\n';
    }
    return out;
}

} // namespace qbank
