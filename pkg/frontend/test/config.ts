export const API_PORT = 8731;
export const API_BASE = `http://127.0.0.1:${API_PORT}`;
