// calculus operators (in progress)
