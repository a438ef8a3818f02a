#include "su3coh/descriptor.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace su3coh {

namespace {

std::string strip_ws(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

// Parse "NAME(a)" or "NAME(a,b)"; returns the integers.
std::vector<long long> parse_args(const std::string& text, const std::string& name,
                                  size_t expected) {
    const std::string inner = text.substr(name.size());
    if (inner.size() < 2 || inner.front() != '(' || inner.back() != ')')
        throw ParseError("expected '" + name + "(...)', got '" + text + "'");
    std::vector<long long> vals;
    std::string token;
    std::istringstream body(inner.substr(1, inner.size() - 2));
    while (std::getline(body, token, ',')) {
        try {
            size_t pos = 0;
            vals.push_back(std::stoll(token, &pos));
            if (pos != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw ParseError("bad integer token '" + token + "' in '" + text + "'");
        }
    }
    if (vals.size() != expected)
        throw ParseError("'" + text + "' takes " + std::to_string(expected) +
                         " integer argument(s)");
    return vals;
}

bool starts_with(const std::string& s, const std::string& prefix) {
    return s.rfind(prefix, 0) == 0;
}

} // namespace

TubeDescriptor parse_tube(const std::string& raw) {
    const std::string text = strip_ws(raw);
    if (text == "S") return TubeDescriptor::s();
    if (text == "L") return TubeDescriptor::l();
    if (text == "Lquot3") return TubeDescriptor::l_quot3();
    if (starts_with(text, "Squot")) {
        const auto v = parse_args(text, "Squot", 1);
        if (v[0] < 2) throw ParseError("Squot(h) requires h > 1, got '" + raw + "'");
        return TubeDescriptor::s_quot(v[0]);
    }
    if (starts_with(text, "P")) {
        const auto v = parse_args(text, "P", 1);
        if (v[0] % 2 == 0) throw ParseError("P(m) requires odd m, got '" + raw + "'");
        return TubeDescriptor::proj(v[0]);
    }
    if (starts_with(text, "F")) {
        const auto v = parse_args(text, "F", 2);
        if (v[0] == 0 && v[1] == 0) throw ParseError("F(0,0) is not a valid tube");
        return TubeDescriptor::flag(v[0], v[1]);
    }
    throw ParseError("unknown tube descriptor '" + raw + "'");
}

SliceRep parse_slice(const std::string& raw) {
    // accept either "U2 3" or "U2(3)" style
    std::string spaced = raw;
    for (char& c : spaced)
        if (c == '(' || c == ')' || c == ',') c = ' ';
    std::istringstream in(spaced);
    std::string head;
    in >> head;
    std::vector<long long> args;
    std::string token;
    while (in >> token) {
        try {
            size_t pos = 0;
            args.push_back(std::stoll(token, &pos));
            if (pos != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw ParseError("bad integer token '" + token + "' in '" + raw + "'");
        }
    }
    if (head == "SU2" && args.empty()) return SliceRep::su2_standard();
    if (head == "SO3" && args.empty()) return SliceRep::so3_standard();
    if (head == "U2" && args.size() == 1) {
        if (args[0] % 2 == 0) throw ParseError("U2 m requires odd m, got '" + raw + "'");
        return SliceRep::u2(args[0]);
    }
    if (head == "T2" && args.size() == 2) {
        if (args[0] == 0 && args[1] == 0)
            throw ParseError("T2 0 0 is not sphere-transitive");
        return SliceRep::torus(args[0], args[1]);
    }
    throw ParseError("unknown slice descriptor '" + raw + "'");
}

std::string to_text(const TubeDescriptor& t) {
    using K = TubeDescriptor::Kind;
    switch (t.kind) {
        case K::S: return "S";
        case K::L: return "L";
        case K::P: return "P(" + std::to_string(t.m) + ")";
        case K::F: return "F(" + std::to_string(t.p) + "," + std::to_string(t.q) + ")";
        case K::SQuot: return "Squot(" + std::to_string(t.h) + ")";
        case K::LQuot3: return "Lquot3";
    }
    return "?";
}

std::string to_text(const SliceRep& s) {
    switch (s.kind) {
        case SliceRep::Kind::SU2Standard: return "SU2";
        case SliceRep::Kind::SO3Standard: return "SO3";
        case SliceRep::Kind::U2: return "U2 " + std::to_string(s.m);
        case SliceRep::Kind::Torus:
            return "T2 " + std::to_string(s.p) + " " + std::to_string(s.q);
    }
    return "?";
}

std::string circle_summary(const CircleSubgroup& c) {
    const auto t = c.triple();
    return "(" + std::to_string(c.k) + "," + std::to_string(c.l) + ") triple (" +
           std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
           std::to_string(t[2]) + ") " + to_string(c.cls);
}

} // namespace su3coh
