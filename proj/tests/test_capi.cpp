#include <stdio.h>
#include "voa.h"
int main(void){ printf("placeholder\n"); return 0; }
