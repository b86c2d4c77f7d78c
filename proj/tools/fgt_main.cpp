#include <iostream>

int main() {
  std::cout << "fgt: placeholder\n";
  return 0;
}
