#include <cstdio>
int main() { std::puts("zetaforge placeholder"); return 0; }
