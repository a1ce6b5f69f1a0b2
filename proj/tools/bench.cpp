#include "qsd/common.hpp"
int main() { return 0; }
