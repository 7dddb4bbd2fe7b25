import { mount } from "./app.js";

// Same-origin by default; ?api=http://host:port points at a remote service
// (the service sends permissive CORS headers unless configured otherwise).
const apiBase = new URLSearchParams(window.location.search).get("api") ?? "";
mount(document, apiBase);
