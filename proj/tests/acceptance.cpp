int main() { return 1; } // acceptance harness pending
