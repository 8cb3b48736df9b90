#include "landen/report.hpp"

namespace landen {

const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped_pole: return "skipped-pole";
    case Status::not_applicable: return "not-applicable";
  }
  return "?";
}

}  // namespace landen
