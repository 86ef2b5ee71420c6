#include "wfs/lp_io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace wfs {

namespace {

constexpr std::size_t kWrapColumn = 180;

void append_wrapped(std::string& out, std::string& line, const std::string& token) {
    if (line.size() + token.size() + 1 > kWrapColumn) {
        out += line;
        out += '\n';
        line = "  ";
    }
    line += ' ';
    line += token;
}

std::string term_token(std::int64_t coef, const std::string& name, bool first) {
    std::string token;
    if (coef < 0)
        token = "- ";
    else if (!first)
        token = "+ ";
    const std::int64_t mag = coef < 0 ? -coef : coef;
    if (mag != 1) token += std::to_string(mag) + " ";
    token += name;
    return token;
}

std::string sense_token(Sense s) {
    switch (s) {
        case Sense::LE: return "<=";
        case Sense::GE: return ">=";
        case Sense::EQ: return "=";
    }
    return "=";
}

} // namespace

std::string emit_lp(const Model& m) {
    std::string out;
    out += "\\ wfs fixed-length model\n";
    out += "\\ T=" + std::to_string(m.meta.t_len) +
           " setting=" + to_string(m.meta.settings.level) + "\n";
    out += "Minimize\n obj: " + m.vars[static_cast<std::size_t>(m.objective_var)].name + "\n";
    out += "Subject To\n";
    for (const auto& c : m.cons) {
        std::string line = " " + c.name + ":";
        bool first = true;
        for (const auto& term : c.terms) {
            append_wrapped(out, line,
                           term_token(term.coef, m.vars[static_cast<std::size_t>(term.var)].name,
                                      first));
            first = false;
        }
        append_wrapped(out, line, sense_token(c.sense));
        append_wrapped(out, line, std::to_string(c.rhs));
        out += line;
        out += '\n';
    }
    out += "Bounds\n";
    for (const auto& v : m.vars) {
        if (v.kind == VarKind::Binary) {
            if (v.fixed()) out += " " + v.name + " = " + std::to_string(v.lb) + "\n";
            continue;
        }
        if (v.unbounded_above)
            out += " " + v.name + " >= " + std::to_string(v.lb) + "\n";
        else if (v.fixed())
            out += " " + v.name + " = " + std::to_string(v.lb) + "\n";
        else
            out += " " + std::to_string(v.lb) + " <= " + v.name + " <= " +
                   std::to_string(v.ub) + "\n";
    }
    out += "Binaries\n";
    {
        std::string line = " ";
        for (const auto& v : m.vars)
            if (v.kind == VarKind::Binary) append_wrapped(out, line, v.name);
        if (line != " ") out += line + "\n";
    }
    out += "Generals\n";
    {
        std::string line = " ";
        for (const auto& v : m.vars)
            if (v.kind == VarKind::Integer) append_wrapped(out, line, v.name);
        if (line != " ") out += line + "\n";
    }
    out += "End\n";
    return out;
}

std::string emit_mps(const Model& m) {
    std::ostringstream os;
    os << "NAME          WFS\n";
    os << "ROWS\n";
    os << " N  obj\n";
    for (const auto& c : m.cons) {
        char sense = 'E';
        if (c.sense == Sense::LE) sense = 'L';
        if (c.sense == Sense::GE) sense = 'G';
        os << " " << sense << "  " << c.name << "\n";
    }
    // Column-major coefficients.
    std::vector<std::vector<std::pair<std::string, std::int64_t>>> per_var(m.vars.size());
    for (const auto& c : m.cons)
        for (const auto& term : c.terms)
            per_var[static_cast<std::size_t>(term.var)].push_back({c.name, term.coef});
    os << "COLUMNS\n";
    os << "    MARKER                 'MARKER'                 'INTORG'\n";
    for (std::size_t vi = 0; vi < m.vars.size(); ++vi) {
        const auto& v = m.vars[vi];
        if (static_cast<int>(vi) == m.objective_var)
            os << "    " << v.name << "  obj  1\n";
        for (const auto& [row, coef] : per_var[vi])
            os << "    " << v.name << "  " << row << "  " << coef << "\n";
    }
    os << "    MARKER                 'MARKER'                 'INTEND'\n";
    os << "RHS\n";
    for (const auto& c : m.cons)
        if (c.rhs != 0) os << "    RHS  " << c.name << "  " << c.rhs << "\n";
    os << "BOUNDS\n";
    for (const auto& v : m.vars) {
        if (v.fixed()) {
            os << " FX BND  " << v.name << "  " << v.lb << "\n";
        } else if (v.kind == VarKind::Binary) {
            os << " BV BND  " << v.name << "\n";
        } else {
            os << " LO BND  " << v.name << "  " << v.lb << "\n";
            if (v.unbounded_above)
                os << " PL BND  " << v.name << "\n";
            else
                os << " UP BND  " << v.name << "  " << v.ub << "\n";
        }
    }
    os << "ENDATA\n";
    return os.str();
}

namespace {

std::string lowercase(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

bool is_number_token(const std::string& tok) {
    if (tok.empty()) return false;
    std::size_t start = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
    if (start == tok.size()) return false;
    return std::all_of(tok.begin() + static_cast<std::ptrdiff_t>(start), tok.end(),
                       [](unsigned char c) { return std::isdigit(c); });
}

std::int64_t to_number(const std::string& tok) { return std::stoll(tok); }

enum class LpSection { None, Objective, Constraints, Bounds, Binaries, Generals, Done };

} // namespace

LpFile parse_lp(std::istream& in) {
    LpFile lp;
    LpSection section = LpSection::None;
    LpFile::Row* current = nullptr;
    std::vector<std::pair<std::string, std::int64_t>>* terms = nullptr;
    std::int64_t pending_coef = 1;
    Sense row_sense = Sense::EQ;
    bool have_sense = false;

    auto finish_row = [&]() {
        current = nullptr;
        terms = nullptr;
        have_sense = false;
        pending_coef = 1;
    };

    std::string raw;
    while (std::getline(in, raw)) {
        const auto comment = raw.find('\\');
        if (comment != std::string::npos) raw.erase(comment);
        std::istringstream ls(raw);
        std::string tok;

        // Section keywords only appear at line starts in the emitted subset.
        std::string first;
        if (!(ls >> first)) continue;
        const std::string lower = lowercase(first);
        if (lower == "minimize" || lower == "min") {
            finish_row();
            section = LpSection::Objective;
            continue;
        }
        if (lower == "subject" || lower == "st" || lower == "s.t.") {
            finish_row();
            section = LpSection::Constraints;
            if (lower == "subject") ls >> tok; // consume "To"
            continue;
        }
        if (lower == "bounds") {
            finish_row();
            section = LpSection::Bounds;
            continue;
        }
        if (lower == "binaries" || lower == "binary" || lower == "bin") {
            finish_row();
            section = LpSection::Binaries;
            continue;
        }
        if (lower == "generals" || lower == "general" || lower == "gen") {
            finish_row();
            section = LpSection::Generals;
            continue;
        }
        if (lower == "end") {
            finish_row();
            section = LpSection::Done;
            continue;
        }

        if (section == LpSection::Bounds) {
            // Forms: "name free", "name = v", "name >= v", "lb <= name <= ub".
            std::vector<std::string> toks{first};
            while (ls >> tok) toks.push_back(tok);
            if (toks.size() == 2 && lowercase(toks[1]) == "free") {
                lp.bounds[toks[0]].free = true;
            } else if (toks.size() == 3 && toks[1] == "=") {
                lp.bounds[toks[0]].lb = to_number(toks[2]);
                lp.bounds[toks[0]].ub = to_number(toks[2]);
            } else if (toks.size() == 3 && toks[1] == ">=") {
                lp.bounds[toks[0]].lb = to_number(toks[2]);
            } else if (toks.size() == 3 && toks[1] == "<=") {
                lp.bounds[toks[0]].ub = to_number(toks[2]);
            } else if (toks.size() == 5 && toks[1] == "<=" && toks[3] == "<=") {
                lp.bounds[toks[2]].lb = to_number(toks[0]);
                lp.bounds[toks[2]].ub = to_number(toks[4]);
            } else {
                throw ParseError("unsupported bound line '" + raw + "'");
            }
            continue;
        }
        if (section == LpSection::Binaries || section == LpSection::Generals) {
            auto& dest = section == LpSection::Binaries ? lp.binaries : lp.generals;
            dest.insert(first);
            while (ls >> tok) dest.insert(tok);
            continue;
        }
        if (section != LpSection::Objective && section != LpSection::Constraints)
            throw ParseError("LP content before a section keyword: '" + raw + "'");

        // Expression tokens, possibly continuing the previous line.
        std::vector<std::string> toks{first};
        while (ls >> tok) toks.push_back(tok);
        for (const auto& t : toks) {
            if (t.back() == ':') {
                finish_row();
                const std::string name = t.substr(0, t.size() - 1);
                if (section == LpSection::Objective) {
                    terms = &lp.objective;
                } else {
                    lp.rows.push_back({});
                    current = &lp.rows.back();
                    current->name = name;
                    terms = &current->terms;
                }
                continue;
            }
            if (terms == nullptr) throw ParseError("LP expression without a row name");
            if (t == "<=" || t == "<") {
                row_sense = Sense::LE;
                have_sense = true;
                continue;
            }
            if (t == ">=" || t == ">") {
                row_sense = Sense::GE;
                have_sense = true;
                continue;
            }
            if (t == "=") {
                row_sense = Sense::EQ;
                have_sense = true;
                continue;
            }
            if (t == "+") continue;
            if (t == "-") {
                pending_coef = -pending_coef;
                continue;
            }
            if (is_number_token(t)) {
                if (have_sense) {
                    if (current == nullptr)
                        throw ParseError("objective must not carry a relation");
                    current->sense = row_sense;
                    current->rhs = pending_coef * to_number(t);
                    // Expression complete; further tokens start a new row.
                    have_sense = false;
                    pending_coef = 1;
                } else {
                    pending_coef = pending_coef * to_number(t);
                }
                continue;
            }
            // A plain name token closes one term.
            terms->push_back({t, pending_coef});
            pending_coef = 1;
        }
    }
    return lp;
}

LpFile parse_lp(const std::string& text) {
    std::istringstream is(text);
    return parse_lp(is);
}

std::map<std::string, double> parse_assignment(std::istream& in) {
    std::map<std::string, double> values;
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::string name;
        if (!(ls >> name)) continue;
        double value = 0.0;
        if (!(ls >> value))
            throw ParseError("assignment line " + std::to_string(lineno) +
                             ": expected 'name value'");
        std::string extra;
        if (ls >> extra)
            throw ParseError("assignment line " + std::to_string(lineno) +
                             ": trailing content '" + extra + "'");
        if (!values.emplace(name, value).second)
            throw ParseError("assignment line " + std::to_string(lineno) +
                             ": duplicate variable '" + name + "'");
    }
    return values;
}

std::map<std::string, double> parse_assignment(const std::string& text) {
    std::istringstream is(text);
    return parse_assignment(is);
}

} // namespace wfs
