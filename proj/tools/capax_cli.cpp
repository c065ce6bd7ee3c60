#include <cstdio>
int main() { std::puts("capax"); return 0; }
