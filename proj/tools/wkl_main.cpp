#include <cstdio>
int main() { std::puts("wkl: not yet wired"); return 0; }
