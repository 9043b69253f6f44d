#pragma once

namespace capcover::cli {

// Exit codes: 0 ok, 1 invalid input, 2 verification failure, 3 guard exceeded.
int run(int argc, char** argv);

}  // namespace capcover::cli
