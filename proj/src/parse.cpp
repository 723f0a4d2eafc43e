#include "semimod/parse.hpp"

#include <algorithm>
#include <sstream>

namespace semimod {

namespace {

struct Token {
    std::string text;
    int line;
    int col;
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::string cur;
    int tok_line = 0, tok_col = 0;
    bool comment = false;
    auto flush = [&]() {
        if (!cur.empty()) {
            out.push_back(Token{cur, tok_line, tok_col});
            cur.clear();
        }
    };
    for (char c : text) {
        if (c == '\n') {
            flush();
            comment = false;
            ++line;
            col = 1;
            continue;
        }
        if (comment) {
            ++col;
            continue;
        }
        if (c == '#') {
            flush();
            comment = true;
        } else if (c == ' ' || c == '\t' || c == '\r') {
            flush();
        } else {
            if (cur.empty()) {
                tok_line = line;
                tok_col = col;
            }
            cur += c;
        }
        ++col;
    }
    flush();
    return out;
}

class Cursor {
public:
    explicit Cursor(std::vector<Token> toks) : toks_(std::move(toks)) {}

    bool done() const { return pos_ >= toks_.size(); }

    const Token& peek() const {
        if (done()) throw ParseError(last_line(), last_col(), "unexpected end of input");
        return toks_[pos_];
    }

    Token next() {
        Token t = peek();
        ++pos_;
        return t;
    }

    void expect(const std::string& word) {
        Token t = next();
        if (t.text != word)
            throw ParseError(t.line, t.col, "expected '" + word + "', found '" + t.text + "'");
    }

    std::string name(const std::string& role) {
        Token t = next();
        if (t.text == "/" || t.text == "end")
            throw ParseError(t.line, t.col, "expected " + role + ", found '" + t.text + "'");
        return t.text;
    }

    int last_line() const { return toks_.empty() ? 1 : toks_.back().line; }
    int last_col() const { return toks_.empty() ? 1 : toks_.back().col + 1; }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

std::vector<std::string> read_until_slash(Cursor& cur, const std::string& role) {
    std::vector<std::string> out;
    while (cur.peek().text != "/") out.push_back(cur.name(role));
    cur.expect("/");
    return out;
}

std::vector<std::vector<std::string>> read_table(Cursor& cur, std::size_t rows, std::size_t cols,
                                                 const std::string& table) {
    std::vector<std::vector<std::string>> out(rows);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            const Token& t = cur.peek();
            if (t.text == "/" || t.text == "end")
                throw ShapeError(table + " table truncated at row " + std::to_string(i) +
                                 " (line " + std::to_string(t.line) + ")");
            out[i].push_back(cur.next().text);
        }
    cur.expect("/");
    return out;
}

}  // namespace

AlgebraFile parse_algebra(std::string_view text) {
    Cursor cur(tokenize(text));
    AlgebraFile file;
    while (!cur.done()) {
        Token head = cur.next();
        if (head.text == "semiring") {
            RawSemiring raw;
            raw.name = cur.name("semiring name");
            cur.expect("/");
            cur.expect("elements");
            raw.elements = read_until_slash(cur, "element name");
            const std::size_t n = raw.elements.size();
            cur.expect("zero");
            raw.zero = cur.name("zero element");
            cur.expect("/");
            cur.expect("one");
            raw.one = cur.name("one element");
            cur.expect("/");
            cur.expect("add");
            raw.add = read_table(cur, n, n, "add");
            cur.expect("mul");
            raw.mul = read_table(cur, n, n, "mul");
            cur.expect("end");
            file.semirings.push_back(std::move(raw));
        } else if (head.text == "semimodule") {
            RawSemimodule raw;
            raw.name = cur.name("semimodule name");
            cur.expect("over");
            raw.over = cur.name("semiring name");
            cur.expect("/");
            cur.expect("elements");
            raw.elements = read_until_slash(cur, "element name");
            const std::size_t n = raw.elements.size();
            cur.expect("zero");
            raw.zero = cur.name("zero element");
            cur.expect("/");
            cur.expect("add");
            raw.add = read_table(cur, n, n, "add");
            cur.expect("act");
            // Row count is the base semiring's size, unknown until
            // resolution; rows are read as n-column lines until the slash.
            std::vector<std::string> flat;
            while (cur.peek().text != "/") flat.push_back(cur.next().text);
            cur.expect("/");
            if (n == 0 || flat.size() % n != 0)
                throw ShapeError("act table of '" + raw.name + "' has " +
                                 std::to_string(flat.size()) + " entries, not a multiple of " +
                                 std::to_string(n));
            for (std::size_t i = 0; i < flat.size(); i += n)
                raw.act.emplace_back(flat.begin() + static_cast<std::ptrdiff_t>(i),
                                     flat.begin() + static_cast<std::ptrdiff_t>(i + n));
            cur.expect("end");
            file.semimodules.push_back(std::move(raw));
        } else if (head.text == "map") {
            RawMapBlock raw;
            raw.name = cur.name("map name");
            cur.expect(":");
            raw.source = cur.name("source module");
            cur.expect("->");
            raw.target = cur.name("target module");
            cur.expect("/");
            while (cur.peek().text != "/") {
                std::string src = cur.name("source element");
                cur.expect("->");
                std::string dst = cur.name("image element");
                raw.entries.emplace_back(std::move(src), std::move(dst));
            }
            cur.expect("/");
            cur.expect("end");
            file.maps.push_back(std::move(raw));
        } else {
            throw ParseError(head.line, head.col,
                             "expected 'semiring', 'semimodule' or 'map', found '" + head.text +
                                 "'");
        }
    }
    return file;
}

SemiringPtr Registry::semiring(const std::string& name) const {
    auto it = semirings.find(name);
    if (it == semirings.end()) throw UnresolvedReference("unknown semiring '" + name + "'");
    return it->second;
}

SemimodulePtr Registry::semimodule(const std::string& name) const {
    auto it = semimodules.find(name);
    if (it != semimodules.end()) return it->second;
    auto sr = semirings.find(name);
    if (sr != semirings.end()) return regular_module(sr->second);
    throw UnresolvedReference("unknown semimodule '" + name + "'");
}

const LinearMap& Registry::map(const std::string& name) const {
    auto it = maps.find(name);
    if (it == maps.end()) throw UnresolvedReference("unknown map '" + name + "'");
    return it->second;
}

void load_into(Registry& reg, const AlgebraFile& file) {
    for (const RawSemiring& raw : file.semirings) {
        if (reg.semirings.count(raw.name))
            throw DuplicateElement("semiring '" + raw.name + "' is already defined");
        reg.semirings.emplace(raw.name, validate_semiring(raw));
    }
    for (const RawSemimodule& raw : file.semimodules) {
        if (reg.semimodules.count(raw.name))
            throw DuplicateElement("semimodule '" + raw.name + "' is already defined");
        reg.semimodules.emplace(raw.name, validate_semimodule(reg.semiring(raw.over), raw));
    }
    for (const RawMapBlock& raw : file.maps) {
        if (reg.maps.count(raw.name))
            throw DuplicateElement("map '" + raw.name + "' is already defined");
        // Pin the regular module under the semiring's name the first time a
        // map endpoint names a bare semiring, so that every later mention
        // resolves to the same instance and the maps stay composable.
        for (const std::string& endpoint : {raw.source, raw.target})
            if (!reg.semimodules.count(endpoint) && reg.semirings.count(endpoint))
                reg.semimodules.emplace(endpoint, regular_module(reg.semirings.at(endpoint)));
        SemimodulePtr src = reg.semimodule(raw.source);
        SemimodulePtr dst = reg.semimodule(raw.target);
        std::vector<Elem> images(static_cast<std::size_t>(src->size()), -1);
        for (const auto& [from, to] : raw.entries) {
            auto fi = src->index_of(from);
            if (!fi)
                throw UnresolvedReference("map '" + raw.name + "': unknown source element '" +
                                          from + "'");
            auto ti = dst->index_of(to);
            if (!ti)
                throw UnresolvedReference("map '" + raw.name + "': unknown image element '" + to +
                                          "'");
            if (images[*fi] >= 0)
                throw ShapeError("map '" + raw.name + "': element '" + from +
                                 "' assigned twice");
            images[*fi] = *ti;
        }
        for (Elem e = 0; e < src->size(); ++e)
            if (images[e] < 0)
                throw ShapeError("map '" + raw.name + "': no image for element '" +
                                 src->elem_name(e) + "'");
        reg.maps.emplace(raw.name, check_linear(src, dst, std::move(images)));
    }
}

namespace {

// Canonical element order: zero first, the rest in declaration order.
std::vector<Elem> canonical_order(Elem zero, int n) {
    std::vector<Elem> order{zero};
    for (Elem e = 0; e < n; ++e)
        if (e != zero) order.push_back(e);
    return order;
}

}  // namespace

std::string serialize(const Semiring& s) {
    std::vector<Elem> order = canonical_order(s.zero(), s.size());
    std::vector<int> pos(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
    std::ostringstream os;
    os << "semiring " << s.name() << " /\nelements";
    for (Elem e : order) os << " " << s.elem_name(e);
    os << " /\nzero " << s.elem_name(s.zero()) << " /\none " << s.elem_name(s.one()) << " /\nadd\n";
    for (Elem a : order) {
        for (std::size_t j = 0; j < order.size(); ++j)
            os << (j ? " " : "") << s.elem_name(s.add(a, order[j]));
        os << "\n";
    }
    os << "/\nmul\n";
    for (Elem a : order) {
        for (std::size_t j = 0; j < order.size(); ++j)
            os << (j ? " " : "") << s.elem_name(s.mul(a, order[j]));
        os << "\n";
    }
    os << "/\nend\n";
    return os.str();
}

std::string serialize(const Semimodule& m) {
    std::vector<Elem> order = canonical_order(m.zero(), m.size());
    std::ostringstream os;
    os << "semimodule " << m.name() << " over " << m.over()->name() << " /\nelements";
    for (Elem e : order) os << " " << m.elem_name(e);
    os << " /\nzero " << m.elem_name(m.zero()) << " /\nadd\n";
    for (Elem a : order) {
        for (std::size_t j = 0; j < order.size(); ++j)
            os << (j ? " " : "") << m.elem_name(m.add(a, order[j]));
        os << "\n";
    }
    os << "/\nact\n";
    // Rows follow the canonical order of the base semiring so the file stays
    // coherent with the semiring's own canonical serialization.
    for (Elem s : canonical_order(m.over()->zero(), m.over()->size())) {
        for (std::size_t j = 0; j < order.size(); ++j)
            os << (j ? " " : "") << m.elem_name(m.act(s, order[j]));
        os << "\n";
    }
    os << "/\nend\n";
    return os.str();
}

std::string serialize(const LinearMap& f, std::string_view name) {
    std::vector<Elem> order = canonical_order(f.source->zero(), f.source->size());
    std::ostringstream os;
    os << "map " << name << " : " << f.source->name() << " -> " << f.target->name() << " /\n";
    for (Elem e : order)
        os << f.source->elem_name(e) << " -> " << f.target->elem_name(f.images[e]) << "\n";
    os << "/\nend\n";
    return os.str();
}

}  // namespace semimod
