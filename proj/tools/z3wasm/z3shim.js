#!/usr/bin/env node
// Interactive SMT-LIB 2 front end for the WebAssembly build of Z3
// (npm package `z3-solver`). Reads commands from stdin, evaluates them
// on a persistent context, writes replies to stdout. Drop-in stand-in
// for `z3 -in -smt2` on machines without a native solver binary.
//
// Usage: node z3shim.js [ignored args...]

'use strict';

function resolveZ3() {
  try {
    return require('z3-solver');
  } catch (e) {
    const { execSync } = require('child_process');
    const root = execSync('npm root -g').toString().trim();
    return require(root + '/z3-solver');
  }
}

// Split a stream of SMT-LIB text into complete top-level forms.
// Tracks parens, string literals, quoted symbols and line comments.
class FormSplitter {
  constructor() {
    this.buf = '';
    this.depth = 0;
    this.mode = 'code'; // code | string | symbol | comment
    this.start = 0;
    this.pos = 0;
  }
  push(chunk) {
    this.buf += chunk;
    const out = [];
    while (this.pos < this.buf.length) {
      const c = this.buf[this.pos];
      if (this.mode === 'comment') {
        if (c === '\n') this.mode = 'code';
      } else if (this.mode === 'string') {
        if (c === '"') this.mode = 'code';
      } else if (this.mode === 'symbol') {
        if (c === '|') this.mode = 'code';
      } else {
        if (c === ';') this.mode = 'comment';
        else if (c === '"') this.mode = 'string';
        else if (c === '|') this.mode = 'symbol';
        else if (c === '(') this.depth++;
        else if (c === ')') {
          this.depth--;
          if (this.depth === 0) {
            out.push(this.buf.slice(this.start, this.pos + 1));
            this.start = this.pos + 1;
          }
        }
      }
      this.pos++;
    }
    if (this.start > 0) {
      this.buf = this.buf.slice(this.start);
      this.pos -= this.start;
      this.start = 0;
    }
    return out;
  }
}

(async () => {
  const { init } = resolveZ3();
  const { Z3 } = await init();
  const ctx = Z3.mk_context(Z3.mk_config());

  const splitter = new FormSplitter();
  const queue = [];
  let running = false;
  let closed = false;

  async function drain() {
    if (running) return;
    running = true;
    while (queue.length > 0) {
      const form = queue.shift();
      if (/^\(\s*exit\s*\)$/.test(form)) {
        process.stdout.write('success\n', () => process.exit(0));
        await new Promise(() => {});
      }
      let reply;
      try {
        reply = await Z3.eval_smtlib2_string(ctx, form);
      } catch (e) {
        reply = '(error "' + String(e).replace(/"/g, "'") + '")\n';
      }
      if (reply && reply.length > 0) process.stdout.write(reply);
    }
    running = false;
    if (closed) process.exit(0);
  }

  process.stdin.setEncoding('utf8');
  process.stdin.on('data', (chunk) => {
    for (const form of splitter.push(chunk)) queue.push(form);
    drain();
  });
  process.stdin.on('end', () => {
    closed = true;
    if (!running) process.exit(0);
  });
})();
