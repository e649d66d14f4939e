#include "cexkit/io.hpp"
int main(){return 0;}
