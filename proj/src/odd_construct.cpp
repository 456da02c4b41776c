namespace ulam {}
