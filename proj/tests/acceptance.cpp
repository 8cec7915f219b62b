#include <qstring/qstring.h>

#include <cstdio>
#include <cstring>
#include <string>

namespace {
void print_line(const char* data, size_t len, void*) {
  std::fwrite(data, 1, len, stdout);
  std::fputc('\n', stdout);
  std::fflush(stdout);
}
}  // namespace

int main(int argc, char** argv) {
  qs_verify_level level = QS_VERIFY_FULL;
  if (argc > 1 && std::strcmp(argv[1], "--quick") == 0) level = QS_VERIFY_QUICK;
  int all_passed = 0;
  if (qs_verify(level, nullptr, print_line, nullptr, &all_passed) != QS_OK) {
    std::fprintf(stderr, "acceptance: %s\n", qs_last_error());
    return 2;
  }
  return all_passed ? 0 : 1;
}
