// Hochschild cochains (in progress)
