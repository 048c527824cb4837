#include "mdim/design_io.hpp"

#include "mdim/error.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace mdim {

bool next_content_line(std::istream& in, std::string& line)
{
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        return true;
    }
    return false;
}

namespace {

IndexList parse_indices(const std::string& line, std::size_t line_no_hint)
{
    std::istringstream ls(line);
    IndexList out;
    std::string tok;
    while (ls >> tok) {
        if (tok.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("non-integer token '" + tok + "' in entry " + std::to_string(line_no_hint));
        out.push_back(std::stoull(tok));
    }
    return out;
}

std::vector<IndexList> read_lists(std::istream& in, std::size_t count, const char* what)
{
    std::vector<IndexList> out;
    std::string line;
    for (std::size_t i = 0; i < count; ++i) {
        if (!next_content_line(in, line))
            throw ParseError("truncated input: expected " + std::to_string(count) + " " + what + " lines, got " +
                             std::to_string(i));
        out.push_back(parse_indices(line, i));
    }
    return out;
}

void write_list(std::ostream& out, const IndexList& l)
{
    for (std::size_t i = 0; i < l.size(); ++i)
        out << (i ? " " : "") << l[i];
    out << '\n';
}

} // namespace

Design read_design(std::istream& in)
{
    std::string line;
    if (!next_content_line(in, line))
        throw ParseError("empty design file");
    std::istringstream hs(line);
    std::string tag;
    long a = -1, b = -1, c = -1;
    hs >> tag >> a >> b >> c;
    if (!hs || a < 0 || b < 0 || c < 0)
        throw ParseError("bad header line: '" + line + "'");

    Design result;
    try {
        if (tag == "SD") {
            const auto v = static_cast<std::size_t>(a);
            auto blocks = read_lists(in, v, "block");
            result = SymmetricDesign{v, static_cast<std::size_t>(b), static_cast<std::size_t>(c),
                                     IncidenceStructure(v, std::move(blocks))};
        } else if (tag == "STD") {
            TransversalDesign d;
            d.g = static_cast<std::size_t>(a);
            d.k = static_cast<std::size_t>(b);
            d.lambda = static_cast<std::size_t>(c);
            d.classes = read_lists(in, d.k, "class");
            auto blocks = read_lists(in, d.lambda * d.g * d.g, "block");
            d.structure = IncidenceStructure(d.k * d.g, std::move(blocks));
            result = std::move(d);
        } else {
            throw ParseError("unknown design tag '" + tag + "' (expected SD or STD)");
        }
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
    if (next_content_line(in, line))
        throw ParseError("unexpected trailing line: '" + line + "'");
    return result;
}

void write_design(std::ostream& out, const Design& d)
{
    if (const auto* sd = std::get_if<SymmetricDesign>(&d)) {
        out << "SD " << sd->v << ' ' << sd->k << ' ' << sd->lambda << '\n';
    } else {
        const auto& td = std::get<TransversalDesign>(d);
        out << "STD " << td.g << ' ' << td.k << ' ' << td.lambda << '\n';
        for (const auto& cls : td.classes) {
            IndexList sorted = cls;
            std::sort(sorted.begin(), sorted.end());
            write_list(out, sorted);
        }
    }
    for (const auto& blk : structure_of(d).blocks())
        write_list(out, blk);
}

Design load_design(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    return read_design(in);
}

void save_design(const std::string& path, const Design& d)
{
    std::ofstream out(path);
    if (!out)
        throw Error("cannot write " + path);
    write_design(out, d);
}

} // namespace mdim
