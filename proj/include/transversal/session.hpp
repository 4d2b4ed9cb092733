#pragma once

#include <map>
#include <string>
#include <vector>

#include "transversal/artin_rees.hpp"
#include "transversal/checks.hpp"

namespace transversal {

/// Parsed and name-resolved session script. Declarations are resolved
/// eagerly so that undefined names and bad polynomials surface as
/// ParseError with a location; `echo` strings are canonical, making
/// print_session / parse_session a round-trip.
struct SessionEnv {
    std::vector<std::string> order;  // declaration order, for printing
    std::map<std::string, RingPtr> rings;
    std::map<std::string, IdealHandle> ideals;
    std::map<std::string, ModulePresentation> modules;
    std::map<std::string, std::string> declEcho;

    bool declared(const std::string& name) const
    {
        return rings.count(name) || ideals.count(name) || modules.count(name);
    }
};

struct SessionCommand {
    std::string verb;
    std::vector<std::string> positionals;
    std::map<std::string, std::string> named;  // canonical value text
    int line = 1;
    std::string echo;
};

struct SessionScript {
    SessionEnv env;
    std::vector<SessionCommand> commands;

    bool operator==(const SessionScript& o) const;
};

SessionScript parse_session(const std::string& text);
std::string print_session(const SessionScript& script);

}  // namespace transversal
