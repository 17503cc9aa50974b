#include <doctest.h>

#include <filesystem>
#include <string>

#include "cohlab/error.hpp"
#include "cohlab/state_io.hpp"

using namespace cohlab;

TEST_CASE("state round trip is exact") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const DensityMatrix rho = random_mixed(Dims{2, 3}, s);
    const DensityMatrix back = parse_state(format_state(rho));
    CHECK(back.dims() == rho.dims());
    CHECK(max_abs_diff(back.matrix(), rho.matrix()) == 0.0);
  }
}

TEST_CASE("state file round trip") {
  const auto path = std::filesystem::temp_directory_path() / "cohlab_state_io_test.json";
  const DensityMatrix rho = random_pure(Dims{2, 2}, 3);
  write_state(path, rho);
  CHECK(max_abs_diff(read_state(path).matrix(), rho.matrix()) == 0.0);
  std::filesystem::remove(path);
}

TEST_CASE("parse errors name the offending field") {
  auto message = [](std::string_view text) -> std::string {
    try {
      parse_state(text);
    } catch (const ParseError& e) {
      return e.what();
    }
    return "";
  };
  CHECK(message("{\"dims\": [2], \"matrix\": [[1,0],[0,0],[0,0]").find("malformed") != std::string::npos);
  CHECK(message("{\"dims\": [2]}").find("matrix") != std::string::npos);
  CHECK(message("{\"matrix\": [[1,0],[0,0],[0,0],[0,0]]}").find("dims") != std::string::npos);
  CHECK(message("{\"dims\": [2], \"matrix\": [[1,0],[0,0],[0,0]]}").find("matrix") != std::string::npos);
  CHECK(message("{\"dims\": [2], \"matrix\": [[1,0],[0,0],[0,\"x\"],[0,0]]}").find("matrix[2][1]") !=
        std::string::npos);
  CHECK(message("{\"dims\": [0], \"matrix\": [[1,0]]}").find("dims[0]") != std::string::npos);
  CHECK(message("[1, 2]").find("object") != std::string::npos);
  CHECK_THROWS_AS(read_state("/nonexistent/cohlab.json"), ParseError);
}

TEST_CASE("state validation errors propagate") {
  CHECK_THROWS_AS(parse_state("{\"dims\": [2], \"matrix\": [[1,0],[0,0],[0,0],[1,0]]}"), InvalidParams);
  CHECK_THROWS_AS(parse_state("{\"dims\": [3], \"matrix\": [[1,0],[0,0],[0,0],[0,0]]}"), ParseError);
}

TEST_CASE("unitary round trip") {
  const Basis b = random_basis(3, 4);
  const Basis back = parse_unitary(format_unitary(b));
  CHECK(back.label() == b.label());
  CHECK(max_abs_diff(back.unitary(), b.unitary()) == 0.0);
  const Basis plain = parse_unitary("{\"matrix\": [[1,0],[0,0],[0,0],[1,0]]}");
  CHECK(plain.label() == "custom");
  CHECK_THROWS_AS(parse_unitary("{\"matrix\": [[1,0],[0,0],[0,0],[2,0]]}"), InvalidParams);
}
