#include <cstdio>

int main() {
    std::puts("kempe-mc pending");
    return 0;
}
